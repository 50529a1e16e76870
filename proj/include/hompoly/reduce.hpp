#pragma once

// Reductions between homomorphism polynomials and the classical hard
// families, each run directly on polynomials and again as a circuit with
// oracle gates, plus the dichotomy classifier.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hompoly/circuit.hpp"
#include "hompoly/gadgets.hpp"
#include "hompoly/genfun.hpp"
#include "hompoly/graph.hpp"
#include "hompoly/poly.hpp"

namespace hompoly {

enum class Complexity { VAC0, VNPComplete, ZeroPolynomial };

std::string complexity_name(Complexity c);

struct Classification {
  Complexity complexity = Complexity::ZeroPolynomial;
  std::string witness;
  std::optional<std::string> caveat;
};

// Cycle: edge or loop -> VNP-complete. Clique: loop -> VNP-complete, edge
// -> VAC0. Tree, outerplanar, planar, genus: edge -> VNP-complete, loop
// only -> VNP-complete with a caveat. Everything else is the zero
// polynomial. Throws InvalidInput for classes outside these six.
Classification classify(const Graph& h, const GraphClass& c);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of evaluating the reduction circuit.
struct CircuitRoute {
  // "agree", "disagree", "skipped: cost" or "not applicable".
  std::string status = "not applicable";
  // "complete": the oracle is bound to the class polynomial of the whole
  // K_N; "host": to its restriction to the gadget host, which the circuit
  // reaches anyway by zeroing every other edge.
  std::string oracle_binding;
  std::size_t size = 0;
  std::size_t oracle_gates = 0;
  std::size_t depth = 0;
  std::vector<std::size_t> nesting_sizes;
};

struct ReductionReport {
  std::string lemma_id;
  std::map<std::string, std::string> parameters;
  bool has_polynomial = true;
  Polynomial produced;
  Polynomial expected;
  bool poly_equal = false;
  std::vector<Check> checks;
  // Informational notes that do not affect the verdict.
  std::vector<std::string> notes;
  std::map<std::string, long long> counts;
  CircuitRoute circuit;
  bool equal = false;
  double wall_seconds = 0;

  void add_check(std::string name, bool pass, std::string detail = {});
  // poly_equal (when there is a polynomial), every check, and no circuit
  // disagreement.
  void finish();
};

// Terms containing every x_e, e in es.
Polynomial enforce_edges(const Polynomial& p, const std::vector<Edge>& es);
// x_e -> 0 for e in es.
Polynomial deny_edges(const Polynomial& p, const std::vector<Edge>& es);
// Enforce e = (u,v), send x_{i,v} to x_{i,u}, x_e to 1, shift vertices
// above v down by one and divide by 2. Throws IntegrityError on an odd
// coefficient.
Polynomial contract_enforced_edge(const Polynomial& p, const Edge& e);
// Divides by 2 after checking every coefficient is an even integer.
Polynomial halve_checked(const Polynomial& p, const std::string& context);

VarSet edge_var_set(const std::vector<Edge>& es);

// Circuit fragments for the same operations.
PolyFn enforce_fn(PolyFn inner, const std::vector<Edge>& es);
PolyFn deny_fn(PolyFn inner, const std::vector<Edge>& es);

// Polynomial of the subgraphs of a gadget host in class c that map to h,
// contain the enforced edges, avoid the denied ones, have exactly
// g.budget edges and (optionally) meet the degree constraints.
Polynomial gadget_poly(const Graph& h, const Gadget& g, const GraphClass& c, bool apply_degree_constraints,
                       const Budget& budget = {});

struct PipelineOptions {
  Budget budget;
  bool run_circuit = true;
  // Oracle enumerations larger than this many candidate subsets skip the
  // circuit evaluation.
  unsigned long long oracle_subsets = 1ULL << 16;
};

ReductionReport reduce_cycles(const Graph& h, int n, const PipelineOptions& opt = {});
// Hamiltonian cycles of K_{n+1} through (0,n), contracted onto K_n.
ReductionReport reduce_cycles_contract(const Graph& h, int n, const PipelineOptions& opt = {});
// hom_poly(K_2, n, Cycle) against an independent even-cycle oracle.
ReductionReport verify_bipartite_cycles(int n, const PipelineOptions& opt = {});
// Cycles of K_n of even length, from permutations on vertex subsets.
Polynomial oracle_even_cycles(int n);

Polynomial reduce_cliques_vac0(const Graph& h, int n);
ReductionReport verify_clique_vac0(const Graph& h, int n, const PipelineOptions& opt = {});

ReductionReport reduce_trees(const Graph& h, const Graph& target, const PipelineOptions& opt = {});

ReductionReport reduce_outerplanar(const Graph& h, int n, const PipelineOptions& opt = {},
                                   std::optional<std::size_t> budget = std::nullopt, bool force_buddy = false);
// Counts under star budgets 2n-4, 2n-3, 2n-2 and which of them reproduce
// the Hamiltonian cycles of K_{n-2}.
ReductionReport calibrate_outerplanar(const Graph& h, int n, const PipelineOptions& opt = {});

// Hamiltonian paths of K_m (each once, not per direction).
Polynomial oracle_ham_paths(int m);

ReductionReport reduce_planar(const Graph& h, int m, const PipelineOptions& opt = {}, bool force_bipartite = false);

ReductionReport verify_genus_block(const PipelineOptions& opt = {});
ReductionReport reduce_genus(const Graph& h, int k, int m, const PipelineOptions& opt = {});

ReductionReport verify_interpolation(std::uint64_t seed, int count = 100);
ReductionReport verify_classifier();
ReductionReport verify_bipartite_certificates();

// The H graphs named in reports: "empty", "loop", "k2", "k3", "p3",
// "k2+loop", "k4", "c4", "c6", "k33" and so on.
Graph named_graph(const std::string& name);

}  // namespace hompoly
