#pragma once

// Generating functions of graph properties and homomorphism polynomials,
// plus brute-force oracles that share no code with the enumerator.

#include <functional>
#include <map>
#include <string>
#include <variant>

#include "hompoly/circuit.hpp"
#include "hompoly/enumerate.hpp"
#include "hompoly/graph.hpp"
#include "hompoly/poly.hpp"

namespace hompoly {

enum class VariableModel { EdgeOnly, EdgeAndVertex };

std::string model_name(VariableModel m);
// "edge" or "edge-vertex".
VariableModel parse_model(const std::string& name);

using Weight = std::variant<VarId, Rational>;

/// Every edge carries a weight; by default its own edge variable. Edges of
/// weight zero never contribute and are skipped during enumeration.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  const Weight& weight(const Edge& e) const;
  void set_weight(const Edge& e, Weight w);
  std::vector<Edge> zero_edges() const;

 private:
  Graph graph_;
  std::map<Edge, Weight> weights_;
};

struct GfOptions {
  SubsetConstraints constraints;
  // Extra predicate on the spanning subgraph (e.g. a homomorphism test).
  std::function<bool(const Graph&)> accept;
  // Applied to each product before it is summed.
  std::function<bool(const Monomial&)> keep_term;
  Budget budget;
};

// Sum over E' in class c of prod w(e), times prod x_v over the endpoints of
// E' in the EdgeAndVertex model.
Polynomial generating_function(const WeightedGraph& wg, const GraphClass& c, VariableModel m,
                               const GfOptions& options = {});

// F^{h,n}_c over K_n: subgraphs in class c whose nontrivial component maps
// homomorphically to h.
Polynomial hom_poly(const Graph& h, int n, const GraphClass& c, VariableModel m, const Budget& budget = {});

// Same over an arbitrary weighted host (zero weights act as denied edges).
Polynomial hom_poly(const Graph& h, const WeightedGraph& host, const GraphClass& c, VariableModel m,
                    GfOptions options = {});

// Hamiltonian cycles of K_n from permutations fixing vertex 0.
Polynomial oracle_uhc(int n);
// Vertex subsets of size >= 2, each contributing the product of its edges.
Polynomial oracle_clique(int n);
// Perfect matchings of g by pairing the lowest unmatched vertex.
Polynomial oracle_matching(const Graph& g);

std::string uhc_oracle_id(int n);
std::string clique_oracle_id(int n);
std::string matching_oracle_id(const Graph& g);
// Stable FNV-1a digest of the canonical edge list, as 16 hex digits.
std::string graph_hash(const Graph& g);

// Edge variables of K_n, lexicographic.
std::vector<VarId> complete_edge_vars(int n);
// Variables a generating function over `host` can mention, in VarId order.
std::vector<VarId> host_variables(const Graph& host, VariableModel m);

}  // namespace hompoly
