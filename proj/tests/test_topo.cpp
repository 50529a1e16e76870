#include "doctest.h"

#include <numeric>

#include "hompoly/gadgets.hpp"
#include "hompoly/topo.hpp"
#include "support.hpp"

using namespace hompoly;

namespace {

Graph cube() {
  Graph g(8);
  for (int v = 0; v < 8; ++v) {
    for (int bit : {1, 2, 4}) {
      if (!(v & bit)) g.add_edge(v, v | bit);
    }
  }
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace

TEST_CASE("face tracing") {
  // Planar K_4: outer triangle 1,2,3 with 0 in the middle.
  RotationSystem k4({{0, {1, 2, 3}}, {1, {0, 3, 2}}, {2, {0, 1, 3}}, {3, {0, 2, 1}}});
  Graph g = Graph::complete(4);
  CHECK_NOTHROW(k4.validate(g));
  CHECK(trace_faces(g, k4) == 4);
  CHECK(embedding_genus(g, k4) == 0);

  GenusResult c = min_genus(cube(), 0);
  REQUIRE(c.witness);
  CHECK(c.genus == 0);
  CHECK(trace_faces(cube(), *c.witness) == 6);
}

TEST_CASE("rotation system validation") {
  Graph g = Graph::complete(3);
  RotationSystem missing({{0, {1, 2}}, {1, {0}}, {2, {0, 1}}});
  CHECK_THROWS_AS(missing.validate(g), InvalidInput);
  RotationSystem extra({{0, {1, 2}}, {1, {0, 2}}, {2, {0, 1, 3}}});
  CHECK_THROWS_AS(extra.validate(g), InvalidInput);
  RotationSystem twice({{0, {1, 1, 2}}, {1, {0, 2}}, {2, {0, 1}}});
  CHECK_THROWS_AS(twice.validate(g), InvalidInput);
}

TEST_CASE("minimum genus") {
  CHECK(min_genus(Graph::complete(4), 2).genus == 0);
  GenusResult k5 = min_genus(Graph::complete(5), 2);
  CHECK(k5.genus == 1);
  REQUIRE(k5.witness);
  CHECK(embedding_genus(Graph::complete(5), *k5.witness) == 1);
  CHECK(min_genus(Graph::complete_bipartite(3, 3), 2).genus == 1);
  GenusResult block = min_genus(genus_block().graph, 2);
  CHECK(block.genus == 1);
  CHECK_FALSE(block.exceeded_limit);
  GenusResult capped = min_genus(Graph::complete(5), 0);
  CHECK(capped.exceeded_limit);
  CHECK(capped.genus == 1);
  CHECK_THROWS_AS(min_genus(Graph::complete(7), 3, 1000), BudgetExceeded);
  CHECK(rotation_system_count(Graph::complete(4)) == 16);
}

TEST_CASE("planarity") {
  CHECK_FALSE(is_planar(Graph::complete(5)));
  CHECK_FALSE(is_planar(Graph::complete_bipartite(3, 3)));
  CHECK(is_planar(planar_gadget(3).graph));
  CHECK_FALSE(is_planar(planar_gadget(4).graph));
  CHECK(is_planar(cube()));
  CHECK(is_outerplanar(Graph::cycle(6)));
  CHECK_FALSE(is_outerplanar(Graph::complete(4)));
  CHECK_FALSE(is_outerplanar(Graph::complete_bipartite(2, 3)));
}

TEST_CASE("genus by blocks") {
  CHECK(graph_genus(Graph::complete(4), 3) == 0);
  CHECK(graph_genus(amalgam_chain(2).graph, 3) == 2);
  CHECK(graph_genus(amalgam_chain(3).graph, 1) == 2);
  CHECK(biconnected_blocks(Graph::path(4)).size() == 3);
}

TEST_CASE("minor witnesses") {
  Graph k33 = Graph::complete_bipartite(3, 3);
  auto w = find_minor(k33, MinorTarget::K33);
  REQUIRE(w);
  CHECK(check_minor_witness(k33, minor_target_graph(MinorTarget::K33), w->branch_sets).empty());

  Graph block = genus_block().graph;
  auto bw = find_k33_or_k5_minor(block);
  REQUIRE(bw);
  Graph target = bw->target == minor_target_name(MinorTarget::K5) ? minor_target_graph(MinorTarget::K5)
                                                                  : minor_target_graph(MinorTarget::K33);
  CHECK(check_minor_witness(block, target, bw->branch_sets).empty());

  CHECK_FALSE(find_minor(Graph::complete(4), MinorTarget::K23));
  auto k4 = find_outerplanar_obstruction(Graph::complete(4));
  REQUIRE(k4);
  CHECK(k4->target == minor_target_name(MinorTarget::K4));
  CHECK_FALSE(find_outerplanar_obstruction(Graph::cycle(5)));
  CHECK_FALSE(find_k33_or_k5_minor(cube()));

  CHECK_FALSE(check_minor_witness(Graph::complete(4), Graph::complete(4), {{0}, {1}, {2}, {2}}).empty());
  CHECK_FALSE(check_minor_witness(Graph::path(4), Graph::complete(2), {{0, 2}, {1}}).empty());
}

TEST_CASE("amalgamated rotations add genus") {
  GenusResult k5 = min_genus(Graph::complete(5), 1);
  REQUIRE(k5.witness);
  Graph two = disjoint_union(Graph::complete(5), Graph::complete(5));
  two = contract_edge(spanning_subgraph(10, [&] {
                        auto es = two.edges();
                        es.emplace_back(4, 5);
                        return es;
                      }()),
                      Edge(4, 5));
  std::map<int, std::vector<int>> shifted;
  for (const auto& [v, ring] : k5.witness->order()) {
    std::vector<int> r;
    for (int w : ring) r.push_back(w + 4);
    shifted[v + 4] = r;
  }
  RotationSystem joined = amalgamate_rotations(*k5.witness, RotationSystem(shifted), 4);
  CHECK_NOTHROW(joined.validate(two));
  CHECK(embedding_genus(two, joined) == 2);
}

TEST_CASE("property: planarity, minors and exhaustive genus agree") {
  std::mt19937_64 rng(test_support::seed());
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    Graph g = test_support::random_graph(rng, 5 + trial % 3, 0.55);
    if (g.edge_count() > 10 || g.edge_count() == 0 || !connected(g)) continue;
    ++checked;
    bool planar = is_planar(g);
    CHECK(planar == !find_k33_or_k5_minor(g).has_value());
    GenusResult r = min_genus(g, 0);
    CHECK(planar == (r.genus == 0));
    CHECK(is_outerplanar(g) == !find_outerplanar_obstruction(g).has_value());
  }
  CHECK(checked >= 50);
}

TEST_CASE("property: genus is invariant under relabelling") {
  std::mt19937_64 rng(test_support::seed() + 5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = test_support::random_graph(rng, 6, 0.6);
    if (!connected(g) || g.edge_count() > 11) continue;
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(min_genus(g, 2).genus == min_genus(relabel(g, perm), 2).genus);
    CHECK(is_planar(g) == is_planar(relabel(g, perm)));
  }
}

TEST_CASE("property: every rotation system gives an integral genus") {
  std::mt19937_64 rng(test_support::seed() + 9);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = test_support::random_graph(rng, 6, 0.6);
    if (!connected(g)) continue;
    std::map<int, std::vector<int>> order;
    auto adj = g.adjacency();
    for (int v = 0; v < g.n(); ++v) {
      order[v] = adj[v];
      std::shuffle(order[v].begin(), order[v].end(), rng);
    }
    RotationSystem r(order);
    int genus = -1;
    CHECK_NOTHROW(genus = embedding_genus(g, r));
    CHECK(genus >= 0);
    int f = trace_faces(g, r);
    CHECK(g.n() - static_cast<int>(g.edge_count()) + f == 2 - 2 * genus);
  }
}
