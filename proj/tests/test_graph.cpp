#include "doctest.h"

#include <set>

#include "hompoly/enumerate.hpp"
#include "hompoly/graph.hpp"
#include "support.hpp"

using namespace hompoly;

TEST_CASE("graph invariants") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(0, 2);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == Edge(0, 2));
  CHECK(g.edges()[1] == Edge(1, 3));
  CHECK(g.has_edge(1, 3));
  g.add_edge(2, 2);
  CHECK(g.has_loop(2));
  CHECK(g.edge_count() == 2);
  CHECK_THROWS(g.add_edge(0, 7));
  CHECK_THROWS(g.add_loop(4));
  g.set_label("center", 0);
  CHECK(g.label("center") == 0);
  CHECK_THROWS(g.set_label("center", 1));
  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph::complete_bipartite(3, 3).edge_count() == 9);
}

TEST_CASE("homomorphisms") {
  CHECK_FALSE(is_homomorphic(Graph::cycle(3), Graph::complete(2)));
  CHECK(is_homomorphic(Graph::cycle(4), Graph::complete(2)));
  CHECK(is_homomorphic(Graph::complete(5), Graph::looped_vertex()));
  CHECK(is_homomorphic(Graph::edgeless(4), Graph::edgeless(1)));
  CHECK_FALSE(is_homomorphic(Graph::path(2), Graph::edgeless(3)));
  CHECK(is_homomorphic(Graph::cycle(5), Graph::complete(3)));
  CHECK_FALSE(is_homomorphic(Graph::complete(4), Graph::complete(3)));
}

TEST_CASE("single-edge test") {
  CHECK(hom_to_single_edge(Graph::cycle(4)));
  CHECK_FALSE(hom_to_single_edge(Graph::cycle(5)));
  // A grid of height one: two paths joined rung by rung.
  Graph ladder(8);
  for (int i = 0; i < 3; ++i) {
    ladder.add_edge(i, i + 1);
    ladder.add_edge(i + 4, i + 5);
  }
  for (int i = 0; i < 4; ++i) ladder.add_edge(i, i + 4);
  CHECK(hom_to_single_edge(ladder));
}

TEST_CASE("class recognition") {
  Graph triangle_plus(5);
  triangle_plus.add_edge(0, 1);
  triangle_plus.add_edge(1, 2);
  triangle_plus.add_edge(0, 2);
  CHECK(recognize(triangle_plus, GraphClass::cycle()));
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_FALSE(recognize(two_edges, GraphClass::clique()));
  CHECK_FALSE(recognize(Graph::complete(4), GraphClass::outerplanar()));
  CHECK(recognize(Graph::complete(4), GraphClass::planar()));
  CHECK_FALSE(recognize(Graph::complete(5), GraphClass::planar()));
  CHECK(recognize(Graph::complete(5), GraphClass::genus_k(1)));
  CHECK_FALSE(recognize(Graph::complete(4), GraphClass::genus_k(1)));
  CHECK_FALSE(recognize(Graph::edgeless(3), GraphClass::tree()));
  CHECK(recognize(Graph::path(4), GraphClass::tree()));
  CHECK(recognize(two_edges, GraphClass::perfect_matching()));
}

TEST_CASE("enumeration counts") {
  auto count = [](int n, const GraphClass& c) {
    int k = 0;
    enumerate_subgraphs(n, c, [&](std::uint64_t, const Graph&) { ++k; });
    return k;
  };
  CHECK(count(4, GraphClass::cycle()) == 7);
  CHECK(count(4, GraphClass::clique()) == 11);
  CHECK(count(3, GraphClass::tree()) == 6);
  CHECK(count(4, GraphClass::perfect_matching()) == 3);
  // Cayley: labelled trees on exactly 5 vertices, plus those on fewer.
  CHECK(count(5, GraphClass::tree()) == 10 + 10 * 3 + 5 * 16 + 125);
}

TEST_CASE("enumeration order is ascending bitmask") {
  for (const auto& c : {GraphClass::cycle(), GraphClass::tree(), GraphClass::clique(), GraphClass::outerplanar()}) {
    std::vector<std::uint64_t> masks;
    enumerate_subgraphs(5, c, [&](std::uint64_t m, const Graph&) { masks.push_back(m); });
    CHECK(std::is_sorted(masks.begin(), masks.end()));
    CHECK(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
  }
}

TEST_CASE("property: enumeration agrees with recognition") {
  const std::vector<GraphClass> classes = {GraphClass::cycle(),       GraphClass::clique(), GraphClass::tree(),
                                           GraphClass::outerplanar(), GraphClass::planar(), GraphClass::genus_k(0),
                                           GraphClass::genus_k(1),    GraphClass::perfect_matching()};
  for (int n = 1; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (const auto& c : classes) {
      std::set<std::uint64_t> got;
      enumerate_subgraphs(n, c, [&](std::uint64_t m, const Graph&) { got.insert(m); });
      std::set<std::uint64_t> want;
      for (std::uint64_t m = 0; m < (1ULL << pairs); ++m) {
        if (recognize(test_support::graph_from_mask(n, m), c)) want.insert(m);
      }
      CHECK_MESSAGE(got == want, "n=" << n << " class=" << c.str());
    }
  }
}

TEST_CASE("enumeration constraints") {
  Graph k4 = Graph::complete(4);
  std::vector<std::vector<int>> seen;
  SubsetConstraints cons;
  cons.required = {Edge(0, 1)};
  cons.forbidden = {Edge(2, 3)};
  enumerate_edge_subsets(k4, GraphClass::cycle(), cons, [&](const std::vector<int>& s) { seen.push_back(s); });
  // Both 4-cycles through (0,1) also use (2,3), so only the two triangles remain.
  CHECK(seen.size() == 2);
  cons.edge_count = 4;
  seen.clear();
  enumerate_edge_subsets(k4, GraphClass::cycle(), cons, [&](const std::vector<int>& s) { seen.push_back(s); });
  CHECK(seen.empty());
  CHECK_THROWS_AS(enumerate_edge_subsets(Graph::path(3), GraphClass::tree(), SubsetConstraints{{Edge(0, 2)}, {}, {}},
                                         [](const std::vector<int>&) {}),
                  MissingEdge);
  Budget tiny;
  tiny.max_subsets = 10;
  CHECK_THROWS_AS(enumerate_subgraphs(5, GraphClass::planar(), [](std::uint64_t, const Graph&) {}, tiny),
                  BudgetExceeded);
}

TEST_CASE("edge contraction") {
  Graph t = contract_edge(Graph::complete(3), Edge(0, 1));
  CHECK(t.n() == 2);
  CHECK(t.edge_count() == 1);
  Graph p = contract_edge(Graph::path(3), Edge(1, 2));
  CHECK(p == Graph::path(2));
  CHECK_THROWS_AS(contract_edge(Graph::path(3), Edge(0, 2)), MissingEdge);
}

TEST_CASE("property: homomorphism relation") {
  std::mt19937_64 rng(test_support::seed());
  for (int trial = 0; trial < 150; ++trial) {
    Graph a = test_support::random_graph(rng, 3 + trial % 5, 0.5);
    Graph b = test_support::random_graph(rng, 2 + trial % 4, 0.6);
    Graph c = test_support::random_graph(rng, 2 + trial % 3, 0.7);
    CHECK(is_homomorphic(a, a));
    if (is_homomorphic(a, b) && is_homomorphic(b, c)) CHECK(is_homomorphic(a, c));
  }
}

TEST_CASE("property: single-edge test equals homomorphism to K_2") {
  Graph k2 = Graph::complete(2);
  for (int n = 1; n <= 6; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (1ULL << pairs); ++m) {
      Graph g = test_support::graph_from_mask(n, m);
      if (hom_to_single_edge(g) != is_homomorphic(g, k2)) {
        FAIL("disagreement at n=" << n << " mask=" << m);
      }
    }
  }
  std::mt19937_64 rng(test_support::seed() + 7);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = test_support::random_graph(rng, 7 + trial % 2, 0.3);
    CHECK(hom_to_single_edge(g) == is_homomorphic(g, k2));
  }
}

TEST_CASE("property: contraction shrinks by one and keeps the component connected") {
  std::mt19937_64 rng(test_support::seed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = test_support::random_graph(rng, 4 + trial % 5, 0.5);
    if (g.edge_count() == 0) continue;
    const Edge e = g.edges()[trial % g.edge_count()];
    Graph h = contract_edge(g, e);
    CHECK(h.n() == g.n() - 1);
    CHECK(connected_components(h).size() == connected_components(g).size());
  }
}
