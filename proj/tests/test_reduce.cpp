#include "doctest.h"

#include "hompoly/reduce.hpp"
#include "support.hpp"

using namespace hompoly;
using test_support::x;

namespace {

PipelineOptions fast() {
  PipelineOptions o;
  o.run_circuit = false;
  return o;
}

bool support_contained(const Polynomial& a, const Polynomial& b) {
  std::set<std::string> bs;
  for (const auto& t : b.terms()) bs.insert(t.monomial.str());
  for (const auto& t : a.terms()) {
    if (!bs.contains(t.monomial.str())) return false;
  }
  return true;
}

std::string failed_checks(const ReductionReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (!c.pass) out += c.name + " (" + c.detail + "); ";
  }
  return out;
}

}  // namespace

TEST_CASE("enforcing and denying edges") {
  Polynomial c4 = oracle_uhc(4);
  CHECK(enforce_edges(c4, {Edge(0, 1)}).size() == 2);
  CHECK(enforce_edges(c4, {Edge(0, 1), Edge(2, 3)}).size() == 2);
  CHECK(enforce_edges(c4, {Edge(0, 1), Edge(0, 2)}).size() == 1);
  CHECK(deny_edges(c4, {Edge(0, 1)}).size() == 1);
  CHECK(deny_edges(c4, {Edge(0, 1), Edge(0, 2)}).is_zero());
  CHECK(enforce_edges(c4, {}) == c4);
  Polynomial p = x(0, 1) * x(1, 2) + x(1, 2) + Polynomial::constant(4);
  CHECK(deny_edges(p, {Edge(0, 1)}) == x(1, 2) + Polynomial::constant(4));
  CHECK(enforce_edges(p, {Edge(1, 2)}) == x(0, 1) * x(1, 2) + x(1, 2));
}

TEST_CASE("contracting an enforced edge") {
  CHECK(contract_enforced_edge(oracle_uhc(4), Edge(0, 3)) == oracle_uhc(3));
  CHECK(contract_enforced_edge(oracle_uhc(5), Edge(0, 4)) == oracle_uhc(4));
  CHECK(contract_enforced_edge(oracle_uhc(6), Edge(2, 5)) == oracle_uhc(5));
  CHECK(contract_enforced_edge(x(1, 2) * x(2, 3), Edge(0, 3)).is_zero());
  CHECK_THROWS_AS(contract_enforced_edge(x(0, 1), Edge(0, 1)), IntegrityError);
  CHECK(halve_checked(Polynomial::constant(4) * x(0, 1), "test") == Polynomial::constant(2) * x(0, 1));
  CHECK_THROWS_AS(halve_checked(Polynomial::constant(3) * x(0, 1), "test"), IntegrityError);
  CHECK_THROWS_AS(halve_checked(scale(x(0, 1), Rational(1, 2)), "test"), IntegrityError);
}

TEST_CASE("cycle reductions") {
  struct Case {
    const char* h;
    int n;
  };
  for (Case c : {Case{"k2", 4}, Case{"loop", 5}, Case{"k2", 5}, Case{"k3", 5}, Case{"k2+loop", 4}}) {
    ReductionReport r = reduce_cycles(named_graph(c.h), c.n, fast());
    CHECK_MESSAGE(r.equal, c.h << " n=" << c.n << " " << failed_checks(r));
    CHECK(r.produced == oracle_uhc(c.n));
  }
  ReductionReport contracted = reduce_cycles_contract(Graph::looped_vertex(), 3, fast());
  CHECK(contracted.equal);
  CHECK(contracted.produced == oracle_uhc(3));
}

TEST_CASE("cycle reductions evaluate their circuits") {
  ReductionReport r = reduce_cycles(Graph::looped_vertex(), 4);
  CHECK(r.equal);
  CHECK(r.circuit.status == "agree");
  CHECK(r.circuit.oracle_gates > 0);
  ReductionReport off = reduce_cycles(Graph::looped_vertex(), 4, fast());
  CHECK(off.circuit.status == "skipped: disabled");
}

TEST_CASE("bipartite cycles") {
  CHECK(oracle_even_cycles(4).size() == 3);
  CHECK(oracle_even_cycles(5).size() == 15);
  for (int n = 3; n <= 6; ++n) {
    ReductionReport r = verify_bipartite_cycles(n, fast());
    CHECK_MESSAGE(r.equal, "n=" << n << " " << failed_checks(r));
  }
}

TEST_CASE("cliques") {
  Polynomial k4_edges = x(0, 1) * x(0, 2) * x(0, 3) * x(1, 2) * x(1, 3) * x(2, 3);
  CHECK(reduce_cliques_vac0(Graph::complete(3), 4) == oracle_clique(4) - k4_edges);
  CHECK(reduce_cliques_vac0(Graph::complete(2), 4).size() == 6);
  CHECK(reduce_cliques_vac0(Graph::edgeless(3), 4).is_zero());
  CHECK_THROWS_AS(reduce_cliques_vac0(Graph::looped_vertex(), 5), InvalidInput);
  for (const char* h : {"k2", "k3", "k4", "c5", "p3"}) {
    ReductionReport r = verify_clique_vac0(named_graph(h), 5, fast());
    CHECK_MESSAGE(r.equal, h << " " << failed_checks(r));
  }
}

TEST_CASE("trees and perfect matchings") {
  ReductionReport c4 = reduce_trees(Graph::complete(2), Graph::cycle(4), fast());
  CHECK(c4.equal);
  CHECK(c4.counts.at("surviving_trees") == 2);
  ReductionReport k4 = reduce_trees(Graph::complete(2), Graph::complete(4), fast());
  CHECK(k4.equal);
  CHECK(k4.counts.at("surviving_trees") == 3);
  ReductionReport p3 = reduce_trees(Graph::complete(2), Graph::path(3), fast());
  CHECK(p3.equal);
  CHECK(p3.produced.is_zero());
  ReductionReport k2 = reduce_trees(Graph::complete(3), Graph::complete(2), fast());
  CHECK(k2.equal);
  CHECK(k2.produced == x(0, 1));
}

TEST_CASE("outerplanar star reduction") {
  ReductionReport six = reduce_outerplanar(Graph::complete(3), 6, fast());
  CHECK_MESSAGE(six.equal, failed_checks(six));
  CHECK(six.counts.at("surviving_subgraphs") == 6);
  CHECK(six.produced == oracle_uhc(4));
  ReductionReport seven = reduce_outerplanar(Graph::complete(3), 7, fast());
  CHECK(seven.equal);
  CHECK(seven.counts.at("surviving_subgraphs") == 24);
  ReductionReport buddy = reduce_outerplanar(Graph::complete(2), 5, fast());
  CHECK_MESSAGE(buddy.equal, failed_checks(buddy));
  CHECK(buddy.produced == oracle_uhc(3));
  ReductionReport cal = calibrate_outerplanar(Graph::complete(3), 6, fast());
  CHECK_MESSAGE(cal.equal, failed_checks(cal));
}

TEST_CASE("planar reduction") {
  CHECK(oracle_ham_paths(4).size() == 12);
  CHECK(oracle_ham_paths(5).size() == 60);
  ReductionReport four = reduce_planar(Graph::complete(3), 4, fast());
  CHECK_MESSAGE(four.equal, failed_checks(four));
  CHECK(four.counts.at("valid_middle_subsets") == 12);
  ReductionReport five = reduce_planar(Graph::complete(3), 5, fast());
  CHECK(five.equal);
  CHECK(five.counts.at("valid_middle_subsets") == 60);
  ReductionReport bip = reduce_planar(Graph::complete(2), 4, fast(), true);
  CHECK_MESSAGE(bip.equal, failed_checks(bip));
  CHECK(bip.counts.at("bipartite_vertices") == 18);
}

TEST_CASE("genus reductions") {
  ReductionReport block = verify_genus_block(fast());
  CHECK_MESSAGE(block.equal, failed_checks(block));
  for (int k = 1; k <= 2; ++k) {
    ReductionReport r = reduce_genus(Graph::complete(4), k, 4, fast());
    CHECK_MESSAGE(r.equal, "k=" << k << " " << failed_checks(r));
    CHECK(r.counts.at("chain_vertices") == 7 * k + 1);
  }
  ReductionReport bip = reduce_genus(Graph::complete(2), 1, 4, fast());
  CHECK_MESSAGE(bip.equal, failed_checks(bip));
}

TEST_CASE("classifier") {
  auto cls = [](const char* h, const GraphClass& c) { return classify(named_graph(h), c).complexity; };
  CHECK(cls("loop", GraphClass::cycle()) == Complexity::VNPComplete);
  CHECK(cls("k2", GraphClass::cycle()) == Complexity::VNPComplete);
  CHECK(cls("empty", GraphClass::cycle()) == Complexity::ZeroPolynomial);
  CHECK(cls("loop", GraphClass::clique()) == Complexity::VNPComplete);
  CHECK(cls("k2", GraphClass::clique()) == Complexity::VAC0);
  CHECK(cls("k5", GraphClass::clique()) == Complexity::VAC0);
  CHECK(cls("k2", GraphClass::tree()) == Complexity::VNPComplete);
  CHECK(cls("k2", GraphClass::outerplanar()) == Complexity::VNPComplete);
  CHECK(cls("k3", GraphClass::planar()) == Complexity::VNPComplete);
  CHECK(cls("k2", GraphClass::genus_k(2)) == Complexity::VNPComplete);
  CHECK(cls("empty", GraphClass::planar()) == Complexity::ZeroPolynomial);
  Classification loop_tree = classify(Graph::looped_vertex(), GraphClass::tree());
  CHECK(loop_tree.complexity == Complexity::VNPComplete);
  CHECK(loop_tree.caveat.has_value());
  CHECK_FALSE(classify(Graph::complete(2), GraphClass::tree()).caveat.has_value());
  CHECK_THROWS_AS(classify(Graph::complete(2), GraphClass::perfect_matching()), InvalidInput);
  CHECK(complexity_name(Complexity::VAC0) == "VAC0");
  CHECK(verify_classifier().equal);
  CHECK(verify_bipartite_certificates().equal);
}

TEST_CASE("interpolation self-check") {
  ReductionReport r = verify_interpolation(test_support::seed(), 30);
  CHECK_MESSAGE(r.equal, failed_checks(r));
  CHECK(r.counts.at("trials") == 30);
}

TEST_CASE("named graphs") {
  CHECK(named_graph("k33") == Graph::complete_bipartite(3, 3));
  CHECK(named_graph("K2,3") == Graph::complete_bipartite(2, 3));
  CHECK(named_graph("c6") == Graph::cycle(6));
  CHECK(named_graph("p3") == Graph::path(3));
  CHECK(named_graph("k2+loop").has_loop(0));
  CHECK(named_graph("empty").edge_count() == 0);
  CHECK_THROWS_AS(named_graph("petersen"), InvalidInput);
  CHECK_THROWS_AS(named_graph("kx"), InvalidInput);
}

TEST_CASE("property: homomorphism polynomials are monotone along homomorphisms") {
  std::mt19937_64 rng(test_support::seed());
  const std::vector<GraphClass> classes = {GraphClass::cycle(), GraphClass::clique(), GraphClass::tree(),
                                           GraphClass::outerplanar()};
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph a = test_support::random_graph(rng, 2 + trial % 3, 0.5);
    Graph b = test_support::random_graph(rng, 2 + trial % 4, 0.6);
    if (trial % 7 == 0) b.add_loop(0);
    if (!is_homomorphic(a, b)) std::swap(a, b);
    if (!is_homomorphic(a, b)) continue;
    const GraphClass& c = classes[trial % classes.size()];
    Polynomial pa = hom_poly(a, 5, c, VariableModel::EdgeOnly);
    Polynomial pb = hom_poly(b, 5, c, VariableModel::EdgeOnly);
    CHECK(support_contained(pa, pb));
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("property: enforcing and denying disjoint sets commute") {
  std::mt19937_64 rng(test_support::seed() + 2);
  std::vector<VarId> ev = complete_edge_vars(5);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = test_support::random_poly(rng, ev, 12, 5, true);
    std::vector<Edge> all;
    for (const auto& v : ev) all.emplace_back(v.first(), v.second());
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Edge> keep(all.begin(), all.begin() + 2);
    std::vector<Edge> drop(all.begin() + 2, all.begin() + 4);
    CHECK(enforce_edges(deny_edges(p, drop), keep) == deny_edges(enforce_edges(p, keep), drop));
    CHECK(enforce_edges(enforce_edges(p, {keep[0]}), {keep[1]}) == enforce_edges(p, keep));
    Polynomial split = enforce_edges(p, {keep[0]}) + deny_edges(p, {keep[0]});
    CHECK(split == p);
  }
}
