#include "doctest.h"

#include <set>

#include "hompoly/gadgets.hpp"
#include "hompoly/topo.hpp"

using namespace hompoly;

namespace {

bool has_square(const Graph& g, int a, int b, int c, int d) {
  return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a);
}

}  // namespace

TEST_CASE("star gadget") {
  Gadget s = star_gadget(6);
  CHECK_NOTHROW(s.validate());
  CHECK(s.graph.n() == 6);
  CHECK(s.graph.edge_count() == 15);
  CHECK(s.enforced.size() == 5);
  CHECK(s.budget == 9);
  CHECK(s.role("center") == 0);
  CHECK(s.role("glue-p") == 1);
  CHECK(s.role("glue-q") == 5);
  CHECK(s.denied == std::vector<Edge>{Edge(1, 5)});
  REQUIRE(s.degree_constraints.size() == 1);
  CHECK(s.degree_constraints[0].degree == 2);
  CHECK(s.free_edges().size() == 15 - 5 - 1);
  CHECK_FALSE(s.effective_graph().has_edge(1, 5));
  CHECK(star_gadget(6, 8).budget == 8);
}

TEST_CASE("buddy transform") {
  Gadget b = buddy_transform(star_gadget(6));
  CHECK_NOTHROW(b.validate());
  CHECK(b.graph.n() == 1 + 2 * 5);
  CHECK(b.enforced.size() == 10);
  CHECK(b.budget == 14);
  for (int v = 1; v <= 5; ++v) {
    int buddy = b.role("buddy:" + std::to_string(v));
    CHECK(buddy == 6 + v - 1);
    CHECK(b.graph.has_edge(v, buddy));
    CHECK_FALSE(b.effective_graph().has_edge(0, buddy));
  }
  CHECK(fold_block_to_edge_certificate(b));
  CHECK(is_bipartite(b.effective_graph()));
}

TEST_CASE("buddy contraction recovers the star host") {
  Gadget s = star_gadget(6);
  Gadget b = buddy_transform(s);
  Graph g = b.graph;
  for (int v = 5; v >= 1; --v) g = contract_edge(g, Edge(v, b.role("buddy:" + std::to_string(v))));
  CHECK(g.n() == s.graph.n());
  CHECK(g.edges() == s.graph.edges());
}

TEST_CASE("planar gadget") {
  Gadget p = planar_gadget(3);
  CHECK_NOTHROW(p.validate());
  CHECK(p.graph.n() == 5);
  CHECK(p.graph.edge_count() == 9);
  CHECK(p.enforced.size() == 6);
  CHECK(p.budget == 8);
  CHECK(p.role("apex-a") == 3);
  CHECK(p.role("apex-b") == 4);
  CHECK(is_planar(p.graph));
  // From m = 4 on the full host is K_{m+2} minus the apex pair, which has too
  // many edges to be planar; the surviving subgraphs are apex edges plus a
  // middle path and stay planar.
  Gadget four = planar_gadget(4);
  CHECK(four.graph.edge_count() == 14);
  CHECK_FALSE(is_planar(four.graph));
  std::vector<Edge> survivor = four.enforced;
  survivor.insert(survivor.end(), {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  CHECK(is_planar(spanning_subgraph(6, survivor)));

  Gadget glued = with_planar_glue(planar_gadget(4));
  CHECK(glued.role("glue-p") == 0);
  CHECK(glued.role("glue-q") == 3);
  CHECK(std::find(glued.denied.begin(), glued.denied.end(), Edge(0, 3)) != glued.denied.end());
}

TEST_CASE("bipartite planar gadget") {
  for (int m = 3; m <= 5; ++m) {
    Gadget g = subdivide_and_buddy_planar(with_planar_glue(planar_gadget(m)));
    CHECK_NOTHROW(g.validate());
    CHECK(g.graph.n() == 4 * m + 2);
    CHECK(g.budget == static_cast<std::size_t>(7 * m + m - 1));
    CHECK(is_bipartite(g.effective_graph()));
    CHECK(fold_block_to_edge_certificate(g));
    int a = g.role("apex-a");
    int b = g.role("apex-b");
    for (int v = 0; v < m; ++v) {
      std::string s = std::to_string(v);
      int u = g.role("buddy:" + s);
      CHECK(has_square(g.graph, a, g.role("sub-a:" + s), v, u));
      CHECK(has_square(g.graph, b, g.role("sub-b:" + s), v, u));
      CHECK_FALSE(g.graph.has_edge(a, v));
    }
  }
}

TEST_CASE("genus block") {
  Gadget b = genus_block();
  CHECK(b.graph.n() == 8);
  CHECK(b.graph.edge_count() == 14);
  CHECK(b.graph.degrees() == std::vector<int>{4, 4, 4, 4, 3, 3, 3, 3});
  CHECK_FALSE(is_planar(b.graph));
  Gadget s = genus_block(true);
  CHECK(s.graph.n() == 10);
  CHECK(s.graph.edge_count() == 16);
  CHECK_FALSE(is_planar(s.graph));
}

TEST_CASE("amalgam chains") {
  for (int k = 1; k <= 3; ++k) {
    Gadget c = amalgam_chain(k);
    CHECK(c.graph.n() == 7 * k + 1);
    CHECK(c.graph.edge_count() == static_cast<std::size_t>(14 * k));
    CHECK(c.enforced.size() == static_cast<std::size_t>(14 * k));
    CHECK(biconnected_blocks(c.graph).size() == static_cast<std::size_t>(k));
  }
  Gadget c = amalgam_chain(2);
  CHECK(c.graph.n() == 15);
  CHECK(c.graph.edge_count() == 28);
  CHECK(chain_vertex(c, 0, 8) == chain_vertex(c, 1, 5));
  std::set<int> seen;
  for (int b = 0; b < 2; ++b) {
    for (int j = 1; j <= 8; ++j) seen.insert(chain_vertex(c, b, j));
  }
  CHECK(seen.size() == 15);
  CHECK_THROWS(chain_vertex(c, 2, 1));

  Gadget attached = amalgam_chain(1, 4);
  CHECK_NOTHROW(attached.validate());
  CHECK(attached.graph.n() == 8 + 6 - 1);
  CHECK(attached.budget == 14 + planar_gadget(4).budget);
}

TEST_CASE("chain embeddings reach genus k") {
  GenusResult block = min_genus(genus_block().graph, 1);
  REQUIRE(block.witness);
  for (int k = 1; k <= 3; ++k) {
    Gadget c = amalgam_chain(k);
    RotationSystem r = chain_rotation(c, *block.witness);
    CHECK_NOTHROW(r.validate(c.graph));
    CHECK(embedding_genus(c.graph, r) == k);
  }
}

TEST_CASE("fold certificates") {
  CHECK(fold_block_to_edge_certificate(genus_block(true)));
  CHECK_FALSE(fold_block_to_edge_certificate(genus_block(false)));
  CHECK(fold_block_to_edge_certificate(amalgam_chain(2, std::nullopt, true)));
  CHECK_FALSE(fold_block_to_edge_certificate(amalgam_chain(2)));
  CHECK(fold_block_to_edge_certificate(amalgam_chain(1, 3, true)));
}

TEST_CASE("validation") {
  Gadget g = star_gadget(5);
  g.denied.push_back(g.enforced.front());
  CHECK_THROWS_AS(g.validate(), InvalidInput);
  Gadget h = star_gadget(5);
  h.budget = 1;
  CHECK_THROWS_AS(h.validate(), InvalidInput);
  Gadget k = star_gadget(5);
  k.enforced.emplace_back(0, 9);
  CHECK_THROWS_AS(k.validate(), InvalidInput);
}
