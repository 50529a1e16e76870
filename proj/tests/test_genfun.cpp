#include "doctest.h"

#include "hompoly/genfun.hpp"
#include "support.hpp"

using namespace hompoly;
using test_support::x;

namespace {

Polynomial vx(int v) { return Polynomial::variable(VarId::vertex(v)); }

Polynomial gf_complete(int n, const GraphClass& c, VariableModel m = VariableModel::EdgeOnly) {
  return generating_function(WeightedGraph(Graph::complete(n)), c, m);
}

bool contained_in(const Polynomial& small, const Polynomial& big) {
  for (const auto& t : small.terms()) {
    bool found = false;
    for (const auto& u : big.terms()) {
      if (u.monomial == t.monomial) {
        found = u.coeff == t.coeff;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generating functions of small classes") {
  CHECK(generating_function(WeightedGraph(Graph::complete(3)), GraphClass::cycle(), VariableModel::EdgeOnly) ==
        x(0, 1) * x(0, 2) * x(1, 2));
  Polynomial matchings = gf_complete(4, GraphClass::perfect_matching());
  CHECK(matchings.size() == 3);
  CHECK(matchings == x(0, 1) * x(2, 3) + x(0, 2) * x(1, 3) + x(0, 3) * x(1, 2));
  CHECK(generating_function(WeightedGraph(Graph::complete(2)), GraphClass::tree(), VariableModel::EdgeAndVertex) ==
        x(0, 1) * vx(0) * vx(1));
  CHECK(gf_complete(4, GraphClass::cycle()).size() == 7);
}

TEST_CASE("weights") {
  WeightedGraph wg(Graph::complete(3));
  wg.set_weight(Edge(0, 1), Rational(0));
  wg.set_weight(Edge(1, 2), Rational(3));
  CHECK(wg.zero_edges() == std::vector<Edge>{Edge(0, 1)});
  Polynomial trees = generating_function(wg, GraphClass::tree(), VariableModel::EdgeOnly);
  // Single edges (0,2) and (1,2), and the path 0-2-1.
  CHECK(trees == x(0, 2) + Polynomial::constant(3) + Polynomial::constant(3) * x(0, 2));
  CHECK_THROWS_AS(wg.set_weight(Edge(0, 5), Rational(1)), MissingEdge);
  CHECK_THROWS_AS(wg.weight(Edge(0, 5)), MissingEdge);
}

TEST_CASE("homomorphism polynomials") {
  CHECK(hom_poly(Graph::complete(2), 5, GraphClass::cycle(), VariableModel::EdgeOnly).size() == 15);
  CHECK(hom_poly(Graph::looped_vertex(), 4, GraphClass::cycle(), VariableModel::EdgeOnly).size() == 7);
  CHECK(hom_poly(Graph::edgeless(1), 4, GraphClass::cycle(), VariableModel::EdgeOnly).is_zero());
  CHECK(hom_poly(Graph::edgeless(2), 4, GraphClass::tree(), VariableModel::EdgeOnly).is_zero());
  // Triangles map to K_3, so every cycle of K_4 survives.
  CHECK(hom_poly(Graph::complete(3), 4, GraphClass::cycle(), VariableModel::EdgeOnly) ==
        gf_complete(4, GraphClass::cycle()));
  Polynomial cliques = hom_poly(Graph::complete(3), 4, GraphClass::clique(), VariableModel::EdgeOnly);
  CHECK(cliques.size() == 10);
}

TEST_CASE("brute-force oracles") {
  CHECK(oracle_uhc(3).size() == 1);
  CHECK(oracle_uhc(4).size() == 3);
  CHECK(oracle_uhc(5).size() == 12);
  CHECK(oracle_uhc(6).size() == 60);
  CHECK(oracle_clique(2).size() == 1);
  CHECK(oracle_clique(3).size() == 4);
  CHECK(oracle_clique(4).size() == 11);
  CHECK(oracle_matching(Graph::complete(2)) == x(0, 1));
  CHECK(oracle_matching(Graph::cycle(4)).size() == 2);
  CHECK(oracle_matching(Graph::complete(4)).size() == 3);
  CHECK(oracle_matching(Graph::path(3)).is_zero());
  CHECK(oracle_matching(Graph::complete(6)).size() == 15);
}

TEST_CASE("oracle ids and hashes are stable") {
  CHECK(uhc_oracle_id(5) == "uhc:5");
  CHECK(clique_oracle_id(4) == "clique:4");
  CHECK(graph_hash(Graph::cycle(4)).size() == 16);
  CHECK(graph_hash(Graph::cycle(4)) == graph_hash(Graph::cycle(4)));
  CHECK(graph_hash(Graph::cycle(4)) != graph_hash(Graph::path(4)));
  CHECK(matching_oracle_id(Graph::cycle(4)) == "matching:" + graph_hash(Graph::cycle(4)));
}

TEST_CASE("variable models") {
  CHECK(parse_model("edge") == VariableModel::EdgeOnly);
  CHECK(parse_model("edge-vertex") == VariableModel::EdgeAndVertex);
  CHECK(model_name(VariableModel::EdgeAndVertex) == "edge-vertex");
  CHECK_THROWS_AS(parse_model("vertex"), InvalidInput);
  CHECK(complete_edge_vars(4).size() == 6);
  CHECK(host_variables(Graph::complete(3), VariableModel::EdgeAndVertex).size() == 6);
}

TEST_CASE("property: homomorphism polynomials sit inside the generating function") {
  std::mt19937_64 rng(test_support::seed());
  const std::vector<GraphClass> classes = {GraphClass::cycle(), GraphClass::clique(), GraphClass::tree(),
                                           GraphClass::outerplanar()};
  for (int trial = 0; trial < 24; ++trial) {
    Graph h = test_support::random_graph(rng, 2 + trial % 3, 0.6);
    if (trial % 5 == 0) h.add_loop(0);
    const GraphClass& c = classes[trial % classes.size()];
    int n = 4 + trial % 2;
    Polynomial hp = hom_poly(h, n, c, VariableModel::EdgeOnly);
    Polynomial all = gf_complete(n, c);
    CHECK(contained_in(hp, all));
    if (!h.loops().empty()) CHECK(hp == all);
  }
}

TEST_CASE("property: Hamiltonian cycles are the top component of the loop cycle polynomial") {
  for (int n = 4; n <= 6; ++n) {
    std::vector<VarId> ev = complete_edge_vars(n);
    VarSet vars(ev.begin(), ev.end());
    Polynomial loop = hom_poly(Graph::looped_vertex(), n, GraphClass::cycle(), VariableModel::EdgeOnly);
    CHECK(homc_direct(loop, vars, n) == oracle_uhc(n));
  }
}

TEST_CASE("property: every tree maps to an edge") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(hom_poly(Graph::complete(2), n, GraphClass::tree(), VariableModel::EdgeOnly) ==
          gf_complete(n, GraphClass::tree()));
  }
}
