#include "hompoly/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace hompoly {

bool subset_mask_less(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.rbegin();
  auto j = b.rbegin();
  for (; i != a.rend() && j != b.rend(); ++i, ++j) {
    if (*i != *j) return *i < *j;
  }
  return i == a.rend() && j != b.rend();
}

namespace {

struct Host {
  const Graph& graph;
  std::vector<char> allowed;     // per edge index
  std::vector<char> required;    // per edge index
  std::size_t required_count = 0;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge index) over allowed edges

  Host(const Graph& g, const SubsetConstraints& cons) : graph(g) {
    allowed.assign(g.edge_count(), 1);
    required.assign(g.edge_count(), 0);
    for (const auto& e : cons.forbidden) {
      int idx = g.edge_index(e);
      if (idx >= 0) allowed[idx] = 0;
    }
    for (const auto& e : cons.required) {
      int idx = g.edge_index(e);
      if (idx < 0) throw MissingEdge("required edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in host");
      if (!required[idx]) ++required_count;
      required[idx] = 1;
    }
    adj.resize(g.n());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!allowed[i]) continue;
      const auto& e = g.edges()[i];
      adj[e.u].emplace_back(e.v, static_cast<int>(i));
      adj[e.v].emplace_back(e.u, static_cast<int>(i));
    }
  }

  bool satisfies(const std::vector<int>& subset, const SubsetConstraints& cons) const {
    if (cons.edge_count && subset.size() != *cons.edge_count) return false;
    std::size_t hits = 0;
    for (int idx : subset) hits += required[idx];
    return hits == required_count;
  }
};

class Collector {
 public:
  Collector(const Host& host, const SubsetConstraints& cons, unsigned long long limit)
      : host_(host), cons_(cons), limit_(limit) {}

  void offer(std::vector<int> subset) {
    if (++seen_ > limit_) throw BudgetExceeded("subset generator exceeded budget");
    std::sort(subset.begin(), subset.end());
    if (host_.satisfies(subset, cons_)) out_.push_back(std::move(subset));
  }

  void flush(const SubsetVisitor& visit) {
    std::sort(out_.begin(), out_.end(), subset_mask_less);
    for (const auto& s : out_) visit(s);
  }

 private:
  const Host& host_;
  const SubsetConstraints& cons_;
  unsigned long long limit_;
  unsigned long long seen_ = 0;
  std::vector<std::vector<int>> out_;
};

void generate_cycles(const Host& h, Collector& out) {
  int n = h.graph.n();
  std::vector<int> path;
  std::vector<int> path_edges;
  std::vector<char> on_path(n, 0);
  for (int s = 0; s < n; ++s) {
    // Cycles whose smallest vertex is s, each direction once.
    std::function<void(int)> walk = [&](int u) {
      for (auto [w, idx] : h.adj[u]) {
        if (w == s && path.size() >= 3 && path[1] < path.back()) {
          std::vector<int> cyc = path_edges;
          cyc.push_back(idx);
          out.offer(std::move(cyc));
        }
        if (w <= s || on_path[w]) continue;
        on_path[w] = 1;
        path.push_back(w);
        path_edges.push_back(idx);
        walk(w);
        path.pop_back();
        path_edges.pop_back();
        on_path[w] = 0;
      }
    };
    path = {s};
    on_path[s] = 1;
    walk(s);
    on_path[s] = 0;
  }
}

void generate_cliques(const Host& h, Collector& out) {
  int n = h.graph.n();
  std::vector<std::vector<int>> edge_at(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    for (auto [w, idx] : h.adj[u]) edge_at[u][w] = idx;
  }
  std::vector<int> members;
  std::vector<int> edges;
  std::function<void(int)> grow = [&](int start) {
    for (int v = start; v < n; ++v) {
      std::size_t before = edges.size();
      bool ok = true;
      for (int u : members) {
        if (edge_at[u][v] < 0) {
          ok = false;
          break;
        }
        edges.push_back(edge_at[u][v]);
      }
      if (ok) {
        members.push_back(v);
        if (members.size() >= 2) out.offer(edges);
        grow(v + 1);
        members.pop_back();
      }
      edges.resize(before);
    }
  };
  grow(0);
}

void generate_trees(const Host& h, Collector& out, std::optional<std::size_t> cap) {
  int n = h.graph.n();
  std::vector<char> in_tree(n, 0);
  std::vector<int> tree_edges;
  // Frontier entries: (edge index, outside vertex).
  std::function<void(int, std::vector<std::pair<int, int>>)> grow = [&](int root,
                                                                        std::vector<std::pair<int, int>> frontier) {
    if (frontier.empty() || (cap && tree_edges.size() == *cap)) {
      if (!tree_edges.empty()) out.offer(tree_edges);
      return;
    }
    auto [idx, w] = frontier.back();
    frontier.pop_back();

    // Without this edge.
    grow(root, frontier);

    // With it: drop frontier edges into w, add edges out of w.
    std::vector<std::pair<int, int>> next;
    next.reserve(frontier.size() + h.adj[w].size());
    for (const auto& f : frontier) {
      if (f.second != w) next.push_back(f);
    }
    for (auto [x, xi] : h.adj[w]) {
      if (x > root && !in_tree[x]) next.emplace_back(xi, x);
    }
    in_tree[w] = 1;
    tree_edges.push_back(idx);
    grow(root, std::move(next));
    tree_edges.pop_back();
    in_tree[w] = 0;
  };
  for (int r = 0; r < n; ++r) {
    std::vector<std::pair<int, int>> frontier;
    for (auto [x, xi] : h.adj[r]) {
      if (x > r) frontier.emplace_back(xi, x);
    }
    in_tree[r] = 1;
    grow(r, std::move(frontier));
    in_tree[r] = 0;
  }
}

void generate_perfect_matchings(const Host& h, Collector& out) {
  int n = h.graph.n();
  if (n == 0 || n % 2 != 0) return;
  std::vector<char> matched(n, 0);
  std::vector<int> chosen;
  std::function<void()> next = [&]() {
    int u = 0;
    while (u < n && matched[u]) ++u;
    if (u == n) {
      out.offer(chosen);
      return;
    }
    matched[u] = 1;
    for (auto [w, idx] : h.adj[u]) {
      if (matched[w]) continue;
      matched[w] = 1;
      chosen.push_back(idx);
      next();
      chosen.pop_back();
      matched[w] = 0;
    }
    matched[u] = 0;
  };
  next();
}

unsigned long long binomial_saturating(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (next > ~0ULL) return ~0ULL;
    r = static_cast<unsigned long long>(next);
  }
  return r;
}

void brute_force(const Host& h, const GraphClass& c, const SubsetConstraints& cons, const SubsetVisitor& visit,
                 const Budget& budget) {
  std::vector<int> base;
  std::vector<int> free_edges;
  for (std::size_t i = 0; i < h.graph.edge_count(); ++i) {
    if (h.required[i]) {
      if (!h.allowed[i]) return;  // required and forbidden: nothing survives
      base.push_back(static_cast<int>(i));
    } else if (h.allowed[i]) {
      free_edges.push_back(static_cast<int>(i));
    }
  }
  if (free_edges.size() > 62) throw BudgetExceeded("too many free edges for exhaustive enumeration");
  unsigned f = static_cast<unsigned>(free_edges.size());

  std::optional<unsigned> pick;
  if (cons.edge_count) {
    if (*cons.edge_count < base.size() || *cons.edge_count - base.size() > f) return;
    pick = static_cast<unsigned>(*cons.edge_count - base.size());
  }
  unsigned long long candidates = pick ? binomial_saturating(f, *pick) : (1ULL << f);
  if (candidates > budget.max_subsets) {
    throw BudgetExceeded("enumeration of " + std::to_string(candidates) + " subsets exceeds budget " +
                         std::to_string(budget.max_subsets));
  }

  std::vector<int> subset;
  std::vector<Edge> chosen;
  auto test = [&](std::uint64_t mask) {
    subset.clear();
    chosen.clear();
    // Merge base and selected free edges in index order.
    std::size_t bi = 0;
    for (unsigned k = 0; k < f; ++k) {
      if (!(mask >> k & 1ULL)) continue;
      int idx = free_edges[k];
      while (bi < base.size() && base[bi] < idx) subset.push_back(base[bi++]);
      subset.push_back(idx);
    }
    while (bi < base.size()) subset.push_back(base[bi++]);
    for (int idx : subset) chosen.push_back(h.graph.edges()[idx]);
    if (recognize(spanning_subgraph(h.graph.n(), chosen), c, budget)) visit(subset);
  };

  if (pick) {
    if (*pick == 0) {
      test(0);
      return;
    }
    // Gosper's hack walks masks with a fixed popcount in ascending order.
    std::uint64_t mask = (1ULL << *pick) - 1;
    std::uint64_t end = 1ULL << f;
    while (mask < end) {
      test(mask);
      std::uint64_t low = mask & (~mask + 1);
      std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  } else {
    for (std::uint64_t mask = 0; mask < (1ULL << f); ++mask) test(mask);
  }
}

}  // namespace

void enumerate_edge_subsets(const Graph& host, const GraphClass& c, const SubsetConstraints& constraints,
                            const SubsetVisitor& visit, const Budget& budget) {
  if (!host.loops().empty()) throw InvalidInput("enumeration host must be loopless");
  Host h(host, constraints);
  if (c.kind == ClassKind::Cycle || c.kind == ClassKind::Clique || c.kind == ClassKind::Tree ||
      c.kind == ClassKind::PerfectMatching) {
    Collector out(h, constraints, budget.max_subsets);
    switch (c.kind) {
      case ClassKind::Cycle: generate_cycles(h, out); break;
      case ClassKind::Clique: generate_cliques(h, out); break;
      case ClassKind::Tree: generate_trees(h, out, constraints.edge_count); break;
      default: generate_perfect_matchings(h, out); break;
    }
    out.flush(visit);
    return;
  }
  brute_force(h, c, constraints, visit, budget);
}

void enumerate_subgraphs(int n, const GraphClass& c,
                         const std::function<void(std::uint64_t mask, const Graph& subgraph)>& visit,
                         const Budget& budget) {
  if (n < 0 || n > 11) throw BudgetExceeded("enumerate_subgraphs supports n <= 11");
  Graph kn = Graph::complete(n);
  std::vector<Edge> chosen;
  enumerate_edge_subsets(
      kn, c, {},
      [&](const std::vector<int>& idx) {
        std::uint64_t mask = 0;
        chosen.clear();
        for (int i : idx) {
          mask |= 1ULL << i;
          chosen.push_back(kn.edges()[i]);
        }
        visit(mask, spanning_subgraph(n, chosen));
      },
      budget);
}

}  // namespace hompoly
