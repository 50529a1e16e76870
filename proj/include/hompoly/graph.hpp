#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hompoly/errors.hpp"

namespace hompoly {

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  // Canonicalizes so that u < v.
  Edge(int a, int b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 with optional self-loops and
/// role labels. Edges are kept sorted and unique.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges, const std::vector<int>& loops = {});

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::set<int>& loops() const noexcept { return loops_; }
  const std::map<std::string, int>& labels() const noexcept { return labels_; }

  int add_vertex();
  void add_edge(int a, int b);
  void add_loop(int v);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const;
  bool has_loop(int v) const { return loops_.contains(v); }

  // Throws InvalidInput if the role is already taken by a different vertex.
  void set_label(const std::string& role, int v);
  std::optional<int> label(const std::string& role) const;

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  // Index of e in edges(), or -1.
  int edge_index(const Edge& e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph looped_vertex();
  static Graph edgeless(int n);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::set<int> loops_;
  std::map<std::string, int> labels_;
};

// Spanning subgraph of K_n (or any host) with the given edges.
Graph spanning_subgraph(int n, const std::vector<Edge>& edges);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Disjoint union; the vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

enum class ClassKind { Cycle, Clique, Tree, Outerplanar, Planar, Genus, PerfectMatching };

/// A graph class in the "one nontrivial component" sense: exactly one
/// component has an edge and it has the class shape; all other components
/// are isolated vertices. PerfectMatching is the exception: every component
/// is a single edge.
struct GraphClass {
  ClassKind kind = ClassKind::Cycle;
  int genus = 0;

  static GraphClass cycle() { return {ClassKind::Cycle, 0}; }
  static GraphClass clique() { return {ClassKind::Clique, 0}; }
  static GraphClass tree() { return {ClassKind::Tree, 0}; }
  static GraphClass outerplanar() { return {ClassKind::Outerplanar, 0}; }
  static GraphClass planar() { return {ClassKind::Planar, 0}; }
  static GraphClass genus_k(int k) { return {ClassKind::Genus, k}; }
  static GraphClass perfect_matching() { return {ClassKind::PerfectMatching, 0}; }

  // "cycle", "clique", "tree", "outerplanar", "planar", "genus:k", "matching"
  static GraphClass parse(const std::string& name);
  std::string str() const;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

bool is_bipartite(const Graph& g);

// Homomorphic to K_2. Requires a loopless graph.
bool hom_to_single_edge(const Graph& g);

// Backtracking search for f: V(g) -> V(h) mapping every edge of g onto an
// edge or loop of h. Loops of g must land on loops of h.
bool is_homomorphic(const Graph& g, const Graph& h, unsigned long long node_budget = Budget{}.hom_nodes);

/// Repeated homomorphism tests against one fixed target. Targets with a loop
/// or bipartite targets with an edge are answered without search.
class HomTester {
 public:
  explicit HomTester(Graph h, unsigned long long node_budget = Budget{}.hom_nodes);
  bool operator()(const Graph& g) const;
  const Graph& target() const { return h_; }

 private:
  Graph h_;
  unsigned long long budget_;
  bool has_loop_ = false;
  bool has_edge_ = false;
  bool bipartite_ = false;
};

bool recognize(const Graph& g, const GraphClass& c, const Budget& budget = {});

// Identifies the endpoints of e (the smaller index survives), merges parallel
// edges, drops the resulting loop and shifts larger indices down by one.
Graph contract_edge(const Graph& g, const Edge& e);

int clique_number(const Graph& g);

}  // namespace hompoly
