#include "hompoly/genfun.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <memory>
#include <numeric>

namespace hompoly {

std::string model_name(VariableModel m) { return m == VariableModel::EdgeOnly ? "edge" : "edge-vertex"; }

VariableModel parse_model(const std::string& name) {
  if (name == "edge") return VariableModel::EdgeOnly;
  if (name == "edge-vertex") return VariableModel::EdgeAndVertex;
  throw InvalidInput("unknown variable model '" + name + "' (expected edge or edge-vertex)");
}

WeightedGraph::WeightedGraph(Graph g) : graph_(std::move(g)) {
  for (const auto& e : graph_.edges()) weights_.emplace(e, VarId::edge(e.u, e.v));
}

const Weight& WeightedGraph::weight(const Edge& e) const {
  auto it = weights_.find(e);
  if (it == weights_.end()) throw MissingEdge("no weight for (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  return it->second;
}

void WeightedGraph::set_weight(const Edge& e, Weight w) {
  auto it = weights_.find(e);
  if (it == weights_.end()) throw MissingEdge("cannot weight non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  it->second = std::move(w);
}

std::vector<Edge> WeightedGraph::zero_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, w] : weights_) {
    if (const auto* c = std::get_if<Rational>(&w); c && *c == 0) out.push_back(e);
  }
  return out;
}

Polynomial generating_function(const WeightedGraph& wg, const GraphClass& c, VariableModel m,
                               const GfOptions& options) {
  const Graph& host = wg.graph();
  SubsetConstraints cons = options.constraints;
  for (const auto& e : wg.zero_edges()) cons.forbidden.push_back(e);

  std::vector<Term> terms;
  std::vector<Edge> chosen;
  std::vector<Monomial::Factor> factors;
  std::vector<char> touched(host.n(), 0);
  enumerate_edge_subsets(
      host, c, cons,
      [&](const std::vector<int>& idx) {
        chosen.clear();
        for (int i : idx) chosen.push_back(host.edges()[i]);
        if (options.accept && !options.accept(spanning_subgraph(host.n(), chosen))) return;
        factors.clear();
        Rational coeff = 1;
        for (const auto& e : chosen) {
          const Weight& w = wg.weight(e);
          if (const auto* v = std::get_if<VarId>(&w)) {
            factors.emplace_back(*v, 1);
          } else {
            coeff *= std::get<Rational>(w);
          }
        }
        if (m == VariableModel::EdgeAndVertex) {
          std::fill(touched.begin(), touched.end(), 0);
          for (const auto& e : chosen) touched[e.u] = touched[e.v] = 1;
          for (int v = 0; v < host.n(); ++v) {
            if (touched[v]) factors.emplace_back(VarId::vertex(v), 1);
          }
        }
        Monomial mono = Monomial::from_factors(factors);
        if (options.keep_term && !options.keep_term(mono)) return;
        terms.push_back({std::move(mono), coeff});
      },
      options.budget);
  return Polynomial::from_terms(std::move(terms));
}

Polynomial hom_poly(const Graph& h, int n, const GraphClass& c, VariableModel m, const Budget& budget) {
  GfOptions options;
  options.budget = budget;
  return hom_poly(h, WeightedGraph(Graph::complete(n)), c, m, std::move(options));
}

Polynomial hom_poly(const Graph& h, const WeightedGraph& host, const GraphClass& c, VariableModel m,
                    GfOptions options) {
  // Every selected subgraph has an edge, which an edgeless loopless target cannot receive.
  if (h.edge_count() == 0 && h.loops().empty()) return {};
  if (h.loops().empty()) {
    auto tester = std::make_shared<HomTester>(h, options.budget.hom_nodes);
    auto previous = options.accept;
    options.accept = [tester, previous](const Graph& g) { return (!previous || previous(g)) && (*tester)(g); };
  }
  return generating_function(host, c, m, options);
}

namespace {

void check_oracle_size(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw InvalidInput(std::string(what) + " oracle needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
  }
}

}  // namespace

Polynomial oracle_uhc(int n) {
  check_oracle_size(n, 3, 10, "uhc");
  std::vector<int> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Term> terms;
  std::vector<Monomial::Factor> f;
  do {
    if (order.front() > order.back()) continue;  // each cycle once, not its reversal
    f.clear();
    int prev = 0;
    for (int v : order) {
      f.emplace_back(VarId::edge(prev, v), 1);
      prev = v;
    }
    f.emplace_back(VarId::edge(prev, 0), 1);
    terms.push_back({Monomial::from_factors(f), 1});
  } while (std::next_permutation(order.begin(), order.end()));
  return Polynomial::from_terms(std::move(terms));
}

Polynomial oracle_clique(int n) {
  check_oracle_size(n, 0, 12, "clique");
  std::vector<Term> terms;
  std::vector<Monomial::Factor> f;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    f.clear();
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (mask >> j & 1u) f.emplace_back(VarId::edge(i, j), 1);
      }
    }
    terms.push_back({Monomial::from_factors(f), 1});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial oracle_matching(const Graph& g) {
  if (!g.loops().empty()) throw InvalidInput("matching oracle needs a loopless graph");
  int n = g.n();
  if (n == 0 || n % 2 != 0) return {};
  std::vector<char> used(n, 0);
  std::vector<Monomial::Factor> f;
  std::vector<Term> terms;
  std::function<void()> pair_up = [&]() {
    int u = 0;
    while (u < n && used[u]) ++u;
    if (u == n) {
      terms.push_back({Monomial::from_factors(f), 1});
      return;
    }
    used[u] = 1;
    for (int w = u + 1; w < n; ++w) {
      if (used[w] || !g.has_edge(u, w)) continue;
      used[w] = 1;
      f.emplace_back(VarId::edge(u, w), 1);
      pair_up();
      f.pop_back();
      used[w] = 0;
    }
    used[u] = 0;
  };
  pair_up();
  return Polynomial::from_terms(std::move(terms));
}

std::string uhc_oracle_id(int n) { return "uhc:" + std::to_string(n); }
std::string clique_oracle_id(int n) { return "clique:" + std::to_string(n); }
std::string matching_oracle_id(const Graph& g) { return "matching:" + graph_hash(g); }

std::string graph_hash(const Graph& g) {
  std::string canon = std::to_string(g.n()) + ";";
  for (const auto& e : g.edges()) canon += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
  canon += ";";
  for (int v : g.loops()) canon += std::to_string(v) + ",";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<VarId> complete_edge_vars(int n) {
  std::vector<VarId> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.push_back(VarId::edge(i, j));
  }
  return out;
}

std::vector<VarId> host_variables(const Graph& host, VariableModel m) {
  VarSet vars;
  for (const auto& e : host.edges()) vars.insert(VarId::edge(e.u, e.v));
  if (m == VariableModel::EdgeAndVertex) {
    for (int v = 0; v < host.n(); ++v) vars.insert(VarId::vertex(v));
  }
  return {vars.begin(), vars.end()};
}

}  // namespace hompoly
