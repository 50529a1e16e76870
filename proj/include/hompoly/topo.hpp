#pragma once

// Combinatorial embeddings of small graphs: rotation systems, face tracing,
// exhaustive minimum orientable genus, planarity and small-minor witnesses.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hompoly/graph.hpp"

namespace hompoly {

/// Cyclic order of neighbours around each vertex. Vertices of degree zero
/// may be omitted.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::map<int, std::vector<int>> order) : order_(std::move(order)) {}

  const std::map<int, std::vector<int>>& order() const noexcept { return order_; }
  std::vector<int>& at(int v) { return order_[v]; }
  const std::vector<int>* find(int v) const;

  // Each edge of g must appear once at each end and nothing else may appear.
  // Throws InvalidInput naming the first violation.
  void validate(const Graph& g) const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  std::map<int, std::vector<int>> order_;
};

// Number of face orbits. Requires a validated rotation system.
int trace_faces(const Graph& g, const RotationSystem& r);

// Orientable genus of the embedding of a connected graph given by r, from
// V - E + F = 2 - 2g. Throws IntegrityError if that is not an even split.
int embedding_genus(const Graph& g, const RotationSystem& r);

struct GenusResult {
  // Minimum genus found; equals limit + 1 when every system exceeds limit.
  int genus = 0;
  bool exceeded_limit = false;
  std::optional<RotationSystem> witness;
  unsigned long long systems_tried = 0;
};

// Exhaustive minimum genus over all rotation systems of a connected graph.
// Rotation systems are taken up to global reflection. Stops early once the
// Euler lower bound is met. Throws BudgetExceeded when the number of systems would
// exceed `max_systems`.
GenusResult min_genus(const Graph& g, int limit, unsigned long long max_systems = Budget{}.rotation_systems);

// Product of (deg(v) - 1)! over vertices with degree > 0, saturating.
unsigned long long rotation_system_count(const Graph& g);

// Joins two embeddings of a vertex amalgam: rotations are concatenated at
// the shared vertex, keeping genus additive.
RotationSystem amalgamate_rotations(const RotationSystem& a, const RotationSystem& b, int shared_vertex);

bool is_planar(const Graph& g);

// Outerplanar iff adding a vertex adjacent to every vertex keeps it planar.
bool is_outerplanar(const Graph& g);

// Biconnected components as edge lists (bridges form singleton blocks).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

// Orientable genus of a graph as the sum over its blocks: planar blocks
// count zero, others go through min_genus. Returns limit + 1 as soon as the
// running sum exceeds limit.
int graph_genus(const Graph& g, int limit, const Budget& budget = {});

/// Branch sets realising a minor: sets[i] is the part contracted onto
/// target vertex i.
struct MinorWitness {
  std::string target;
  std::vector<std::vector<int>> branch_sets;
};

enum class MinorTarget { K5, K33, K4, K23 };

Graph minor_target_graph(MinorTarget t);
std::string minor_target_name(MinorTarget t);

// Exhaustive branch-set search for a minor of g isomorphic to the target.
// Intended for graphs up to about a dozen vertices.
std::optional<MinorWitness> find_minor(const Graph& g, MinorTarget t,
                                       unsigned long long node_budget = 200'000'000ULL);

// K_5 or K_{3,3} witness; none iff g is planar.
std::optional<MinorWitness> find_k33_or_k5_minor(const Graph& g);

// K_4 or K_{2,3} witness; none iff g is outerplanar.
std::optional<MinorWitness> find_outerplanar_obstruction(const Graph& g);

// Checks that the branch sets are disjoint, each induces a connected
// subgraph, and the required pairs are adjacent. Returns the list of
// problems (empty when the witness is valid).
std::vector<std::string> check_minor_witness(const Graph& g, const Graph& target,
                                             const std::vector<std::vector<int>>& branch_sets);

}  // namespace hompoly
