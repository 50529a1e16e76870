#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hompoly/graph.hpp"
#include "hompoly/poly.hpp"

namespace test_support {

// Seed for randomized tests; HOMPOLY_TEST_SEED overrides the fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("HOMPOLY_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261014ULL;
}

inline hompoly::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  hompoly::Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

// Graph on n vertices whose edge set is the bitmask over lexicographic pairs.
inline hompoly::Graph graph_from_mask(int n, std::uint64_t mask) {
  hompoly::Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1ULL) g.add_edge(i, j);
    }
  }
  return g;
}

inline hompoly::Polynomial random_poly(std::mt19937_64& rng, const std::vector<hompoly::VarId>& vars, int terms,
                                       unsigned max_degree, bool multilinear) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<hompoly::Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<hompoly::Monomial::Factor> f;
    unsigned d = deg(rng);
    std::vector<hompoly::VarId> pool = vars;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (unsigned i = 0; i < d; ++i) {
      if (multilinear) {
        if (i >= pool.size()) break;
        f.emplace_back(pool[i], 1);
      } else {
        f.emplace_back(vars[pick(rng)], 1);
      }
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    out.push_back({hompoly::Monomial::from_factors(f), c});
  }
  return hompoly::Polynomial::from_terms(std::move(out));
}

inline hompoly::Polynomial x(int i, int j) { return hompoly::Polynomial::variable(hompoly::VarId::edge(i, j)); }
inline hompoly::Polynomial y(const std::string& name) {
  return hompoly::Polynomial::variable(hompoly::VarId::aux(name));
}

}  // namespace test_support
