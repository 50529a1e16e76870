#pragma once

// Gadget graphs for the outerplanar, planar and bounded-genus reductions.
// A gadget is a host graph (pairs outside it carry weight zero) plus the
// edges the reduction enforces, the edges it zeroes, the exact number of
// edges a surviving subgraph has, and optional per-edge-set degree filters.

#include <optional>
#include <string>
#include <vector>

#include "hompoly/graph.hpp"
#include "hompoly/topo.hpp"

namespace hompoly {

/// Keeps terms whose degree in the variables of `edges` equals `degree`.
struct DegreeConstraint {
  std::string name;
  std::vector<Edge> edges;
  unsigned degree = 0;
};

struct Gadget {
  std::string name;
  Graph graph;
  std::vector<Edge> enforced;
  std::vector<Edge> denied;
  std::size_t budget = 0;
  std::vector<DegreeConstraint> degree_constraints;

  // enforced and denied disjoint, enforced inside the graph, budget at
  // least the enforced count. Throws InvalidInput.
  void validate() const;
  // Graph edges neither enforced nor denied.
  std::vector<Edge> free_edges() const;
  int role(const std::string& name) const;
  // The host with denied pairs removed.
  Graph effective_graph() const;
};

// K_n with center 0 and outer vertices 1..n-1. The star is enforced and the
// budget is star + (n - 2) path edges. Glue vertices p = 1 and q = n - 1:
// (p,q) is denied and the edges at p or q towards other outer vertices must
// contribute degree exactly 2, which leaves the Hamiltonian p-q paths.
Gadget star_gadget(int n, std::optional<std::size_t> budget = std::nullopt);

// Adds a buddy v' for every outer vertex v (indices n + v - 1). Allowed
// pairs: the star, the buddy edges (v,v') and v-w' for v != w; w-p' and
// p-q' are denied as well, so every outerplanar surviving subgraph orients
// its path away from p. Contracting each buddy pair recovers the input.
Gadget buddy_transform(const Gadget& star);

// Middle clique on 0..m-1 and apexes a = m, b = m + 1 adjacent to every
// middle vertex. Apex edges enforced, budget 2m + (m - 1).
Gadget planar_gadget(int m);

// Glue stage on a planar gadget: p = middle 0, q = middle m - 1; (p,q)
// denied and the p/q middle edges must contribute degree 2.
Gadget with_planar_glue(const Gadget& planar);

// Bipartite version of the glued planar gadget: every middle vertex v gets
// a buddy u_v adjacent to v, a and b, the apex edges become paths
// a - v'_a - v and b - v'_b - v, and a middle edge (v,w) becomes v - u_w.
// Edges into u_p, out of q and p - u_q are denied, so surviving subgraphs
// orient their path from p to q. Everything except middle edges is
// enforced.
Gadget subdivide_and_buddy_planar(const Gadget& glued_planar);

// Inner square 1-2-3-4, outer square 5-6-7-8, spokes (5,1),(6,2),(7,3),
// (8,4), diagonals (1,3),(2,4); stored 0-based. With `subdivided`, the two
// diagonals pass through new vertices 8 and 9.
Gadget genus_block(bool subdivided = false);

// k blocks where block i's vertex 8 is block i+1's vertex 5. With
// attach_planar, a glued planar gadget (plain or bipartite to match
// `subdivided`) shares its middle vertex q with block 0's vertex 5. Block
// edges are enforced; the budget is every block edge plus the planar
// gadget's budget.
Gadget amalgam_chain(int k, std::optional<int> attach_planar = std::nullopt, bool subdivided = false);

// Vertex of block i playing role j (1..8) in amalgam_chain(k, ...).
int chain_vertex(const Gadget& chain, int block, int j);

// True iff the effective graph is bipartite, i.e. maps onto a single edge.
bool fold_block_to_edge_certificate(const Gadget& g);

// Rotation system of amalgam_chain(k) (no planar part) built by copying
// one genus-1 block embedding into every block and concatenating rotations
// at the shared vertices.
RotationSystem chain_rotation(const Gadget& chain, const RotationSystem& block_embedding);

}  // namespace hompoly
