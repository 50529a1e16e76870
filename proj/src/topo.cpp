#include "hompoly/topo.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace hompoly {

const std::vector<int>* RotationSystem::find(int v) const {
  auto it = order_.find(v);
  return it == order_.end() ? nullptr : &it->second;
}

void RotationSystem::validate(const Graph& g) const {
  auto adj = g.adjacency();
  for (const auto& [v, ring] : order_) {
    if (v < 0 || v >= g.n()) throw InvalidInput("rotation names unknown vertex " + std::to_string(v));
    std::vector<int> sorted = ring;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != adj[v]) {
      throw InvalidInput("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (!adj[v].empty() && !order_.contains(v)) {
      throw InvalidInput("rotation missing for vertex " + std::to_string(v));
    }
  }
}

namespace {

// Dart-indexed view of a rotation system: dart (v -> ring[v][i]) has index
// offset[v] + i.
struct DartTable {
  std::vector<int> offset;
  std::vector<int> head;       // target vertex of each dart
  std::vector<int> tail;       // source vertex of each dart
  std::vector<int> reverse;    // index of the opposite dart
  std::vector<int> position;   // position of the dart within its ring

  DartTable(const Graph& g, const std::vector<std::vector<int>>& rings) {
    offset.assign(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + static_cast<int>(rings[v].size());
    int darts = offset[g.n()];
    head.resize(darts);
    tail.resize(darts);
    position.resize(darts);
    reverse.assign(darts, -1);
    for (int v = 0; v < g.n(); ++v) {
      for (std::size_t i = 0; i < rings[v].size(); ++i) {
        int d = offset[v] + static_cast<int>(i);
        head[d] = rings[v][i];
        tail[d] = v;
        position[d] = static_cast<int>(i);
      }
    }
  }

  void link_reverses(const std::vector<std::vector<int>>& rings) {
    for (std::size_t v = 0; v < rings.size(); ++v) {
      for (std::size_t i = 0; i < rings[v].size(); ++i) {
        int d = offset[v] + static_cast<int>(i);
        int w = rings[v][i];
        const auto& back = rings[w];
        auto it = std::find(back.begin(), back.end(), static_cast<int>(v));
        reverse[d] = offset[w] + static_cast<int>(it - back.begin());
      }
    }
  }
};

int count_faces(const std::vector<std::vector<int>>& rings, const DartTable& t, std::vector<char>& seen) {
  std::size_t darts = t.head.size();
  seen.assign(darts, 0);
  int faces = 0;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    int d = static_cast<int>(start);
    while (!seen[d]) {
      seen[d] = 1;
      // Arrive at head via the reverse dart; leave along the next neighbour.
      int r = t.reverse[d];
      int v = t.tail[r];
      int next = (t.position[r] + 1) % static_cast<int>(rings[v].size());
      d = t.offset[v] + next;
    }
  }
  return faces;
}

std::vector<std::vector<int>> rings_of(const Graph& g, const RotationSystem& r) {
  std::vector<std::vector<int>> rings(g.n());
  for (const auto& [v, ring] : r.order()) rings[v] = ring;
  return rings;
}

int active_vertices(const Graph& g) {
  auto deg = g.degrees();
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; }));
}

int genus_from_faces(int vertices, int edges, int faces) {
  int twice = 2 - vertices + edges - faces;
  if (twice < 0 || twice % 2 != 0) {
    throw IntegrityError("Euler characteristic V-E+F=" + std::to_string(vertices - edges + faces) +
                         " is not of the form 2-2g");
  }
  return twice / 2;
}

bool edges_connected(const Graph& g) {
  int comps = 0;
  for (const auto& c : connected_components(g)) {
    if (c.size() > 1) ++comps;
  }
  return comps <= 1;
}

}  // namespace

int trace_faces(const Graph& g, const RotationSystem& r) {
  auto rings = rings_of(g, r);
  DartTable table(g, rings);
  table.link_reverses(rings);
  std::vector<char> seen;
  return count_faces(rings, table, seen);
}

int embedding_genus(const Graph& g, const RotationSystem& r) {
  if (!edges_connected(g)) throw InvalidInput("embedding_genus expects a connected graph");
  if (g.edge_count() == 0) return 0;
  r.validate(g);
  int faces = trace_faces(g, r);
  return genus_from_faces(active_vertices(g), static_cast<int>(g.edge_count()), faces);
}

unsigned long long rotation_system_count(const Graph& g) {
  constexpr unsigned long long cap = ~0ULL;
  unsigned long long total = 1;
  for (int d : g.degrees()) {
    for (int k = 2; k < d; ++k) {
      if (total > cap / static_cast<unsigned long long>(k)) return cap;
      total *= static_cast<unsigned long long>(k);
    }
  }
  return total;
}

GenusResult min_genus(const Graph& g, int limit, unsigned long long max_systems) {
  if (!edges_connected(g)) throw InvalidInput("min_genus expects a connected graph");
  GenusResult result;
  if (g.edge_count() == 0) return result;

  auto adj = g.adjacency();
  auto deg = g.degrees();
  int fixed = static_cast<int>(std::max_element(deg.begin(), deg.end()) - deg.begin());

  // Reversing every ring preserves the face count, so the fixed vertex only
  // needs the rings whose second entry precedes its last.
  unsigned long long total = rotation_system_count(g);
  bool mirrored = deg[fixed] >= 3;
  unsigned long long systems = total == ~0ULL || !mirrored ? total : total / 2;
  if (systems > max_systems) {
    throw BudgetExceeded("min_genus: " + std::to_string(systems) + " rotation systems exceed budget " +
                         std::to_string(max_systems));
  }

  int vertices = active_vertices(g);
  int edges = static_cast<int>(g.edge_count());
  // Every face of a simple graph embedding has length >= 3 once there is a cycle.
  int lower = 0;
  if (vertices >= 3) lower = std::max(0, (edges - 3 * vertices + 6 + 5) / 6);

  std::vector<std::vector<int>> rings = adj;
  std::vector<int> free_vertices;
  for (int v = 0; v < g.n(); ++v) {
    if (deg[v] >= 3) free_vertices.push_back(v);
  }
  auto canonical = [&] { return !mirrored || rings[fixed][1] < rings[fixed].back(); };

  DartTable table(g, rings);
  std::vector<char> seen;
  int best = -1;
  std::vector<std::vector<int>> best_rings;

  while (true) {
    if (canonical()) {
      table.link_reverses(rings);
      int faces = count_faces(rings, table, seen);
      ++result.systems_tried;
      int genus = genus_from_faces(vertices, edges, faces);
      if (best < 0 || genus < best) {
        best = genus;
        best_rings = rings;
        if (best <= lower) break;
      }
    }
    // Odometer: advance the tail permutation of the first vertex that has one left.
    std::size_t i = 0;
    for (; i < free_vertices.size(); ++i) {
      auto& ring = rings[free_vertices[i]];
      if (std::next_permutation(ring.begin() + 1, ring.end())) break;
      // next_permutation wrapped around to sorted order; carry on.
    }
    if (i == free_vertices.size()) break;
  }

  std::map<int, std::vector<int>> order;
  for (int v = 0; v < g.n(); ++v) {
    if (!best_rings[v].empty()) order[v] = best_rings[v];
  }
  result.witness = RotationSystem(std::move(order));
  if (best > limit) {
    result.genus = limit + 1;
    result.exceeded_limit = true;
  } else {
    result.genus = best;
  }
  return result;
}

RotationSystem amalgamate_rotations(const RotationSystem& a, const RotationSystem& b, int shared_vertex) {
  std::map<int, std::vector<int>> order = a.order();
  for (const auto& [v, ring] : b.order()) {
    auto& target = order[v];
    if (v != shared_vertex && !target.empty()) {
      throw InvalidInput("amalgamate_rotations: vertex " + std::to_string(v) + " appears in both embeddings");
    }
    target.insert(target.end(), ring.begin(), ring.end());
  }
  return RotationSystem(std::move(order));
}

bool is_planar(const Graph& g) {
  if (g.n() <= 4) return true;
  // Kuratowski graphs and their subdivisions have cyclomatic number at least 4.
  long cyclomatic = static_cast<long>(g.edge_count()) - g.n() + static_cast<long>(connected_components(g).size());
  if (cyclomatic <= 3) return true;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.n()));
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_outerplanar(const Graph& g) {
  Graph apex = g;
  int top = apex.add_vertex();
  for (int v = 0; v < g.n(); ++v) apex.add_edge(v, top);
  return is_planar(apex);
}

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> disc(g.n(), -1);
  std::vector<int> low(g.n(), 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Edge> block;
          Edge cut(u, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == cut) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    if (disc[v] < 0 && !adj[v].empty()) dfs(v, -1);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

namespace {

Graph block_graph(const std::vector<Edge>& block) {
  std::vector<int> verts;
  for (const auto& e : block) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  Graph out(static_cast<int>(verts.size()));
  for (const auto& e : block) out.add_edge(index(e.u), index(e.v));
  return out;
}

int cached_block_genus(const Graph& block, const Budget& budget) {
  static std::mutex mutex;
  static std::map<std::vector<Edge>, int> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(block.edges());
    if (it != cache.end()) return it->second;
  }
  // An unlimited cap keeps the cached value exact.
  int genus = min_genus(block, 1 << 20, budget.rotation_systems).genus;
  std::lock_guard lock(mutex);
  cache.emplace(block.edges(), genus);
  return genus;
}

}  // namespace

int graph_genus(const Graph& g, int limit, const Budget& budget) {
  int total = 0;
  for (const auto& block : biconnected_blocks(g)) {
    Graph b = block_graph(block);
    if (b.n() <= 4 || b.edge_count() <= static_cast<std::size_t>(b.n()) + 2 || is_planar(b)) continue;
    if (total + 1 > limit) return limit + 1;
    total += cached_block_genus(b, budget);
    if (total > limit) return limit + 1;
  }
  return total;
}

// ---- minors ---------------------------------------------------------------

Graph minor_target_graph(MinorTarget t) {
  switch (t) {
    case MinorTarget::K5: return Graph::complete(5);
    case MinorTarget::K33: return Graph::complete_bipartite(3, 3);
    case MinorTarget::K4: return Graph::complete(4);
    case MinorTarget::K23: return Graph::complete_bipartite(2, 3);
  }
  return {};
}

std::string minor_target_name(MinorTarget t) {
  switch (t) {
    case MinorTarget::K5: return "K5";
    case MinorTarget::K33: return "K3,3";
    case MinorTarget::K4: return "K4";
    case MinorTarget::K23: return "K2,3";
  }
  return {};
}

std::vector<std::string> check_minor_witness(const Graph& g, const Graph& target,
                                             const std::vector<std::vector<int>>& branch_sets) {
  std::vector<std::string> problems;
  if (static_cast<int>(branch_sets.size()) != target.n()) {
    problems.push_back("expected " + std::to_string(target.n()) + " branch sets");
    return problems;
  }
  std::vector<int> owner(g.n(), -1);
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    if (branch_sets[i].empty()) problems.push_back("branch set " + std::to_string(i) + " is empty");
    for (int v : branch_sets[i]) {
      if (v < 0 || v >= g.n()) {
        problems.push_back("vertex " + std::to_string(v) + " out of range");
        continue;
      }
      if (owner[v] >= 0) problems.push_back("vertex " + std::to_string(v) + " in two branch sets");
      owner[v] = static_cast<int>(i);
    }
  }
  if (!problems.empty()) return problems;
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    Graph part = induced_subgraph(g, branch_sets[i]);
    if (connected_components(part).size() != 1) {
      problems.push_back("branch set " + std::to_string(i) + " is not connected");
    }
  }
  for (const auto& te : target.edges()) {
    bool linked = false;
    for (const auto& e : g.edges()) {
      if ((owner[e.u] == te.u && owner[e.v] == te.v) || (owner[e.u] == te.v && owner[e.v] == te.u)) {
        linked = true;
        break;
      }
    }
    if (!linked) {
      problems.push_back("branch sets " + std::to_string(te.u) + " and " + std::to_string(te.v) +
                         " are not adjacent");
    }
  }
  return problems;
}

namespace {

// Working multigraph-free copy with original-vertex bookkeeping: each
// remaining vertex remembers the original vertices merged into it.
struct Reduced {
  std::vector<std::set<int>> adj;
  std::vector<std::vector<int>> members;
  std::vector<char> alive;
};

Reduced reduce_for_minor(const Graph& g, bool smooth_degree_two) {
  Reduced r;
  r.adj.assign(g.n(), {});
  r.members.resize(g.n());
  r.alive.assign(g.n(), 1);
  for (int v = 0; v < g.n(); ++v) r.members[v] = {v};
  for (const auto& e : g.edges()) {
    r.adj[e.u].insert(e.v);
    r.adj[e.v].insert(e.u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n(); ++v) {
      if (!r.alive[v]) continue;
      std::size_t d = r.adj[v].size();
      if (d <= 1) {
        for (int w : r.adj[v]) r.adj[w].erase(v);
        r.adj[v].clear();
        r.alive[v] = 0;
        changed = true;
      } else if (d == 2 && smooth_degree_two) {
        // Contract v into its smaller neighbour.
        int x = *r.adj[v].begin();
        int y = *r.adj[v].rbegin();
        r.adj[x].erase(v);
        r.adj[y].erase(v);
        r.adj[x].insert(y);
        r.adj[y].insert(x);
        r.members[x].insert(r.members[x].end(), r.members[v].begin(), r.members[v].end());
        r.adj[v].clear();
        r.alive[v] = 0;
        changed = true;
      }
    }
  }
  return r;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& g, MinorTarget t, unsigned long long budget)
      : target_(minor_target_graph(t)), budget_(budget) {
    bool smooth = t == MinorTarget::K5 || t == MinorTarget::K33;
    reduced_ = reduce_for_minor(g, smooth);
    for (int v = 0; v < g.n(); ++v) {
      if (reduced_.alive[v]) vertices_.push_back(v);
    }
    // BFS order keeps branch sets growing contiguously.
    std::vector<int> order;
    std::vector<char> seen(g.n(), 0);
    for (int s : vertices_) {
      if (seen[s]) continue;
      std::vector<int> queue{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order.push_back(queue[i]);
        for (int w : reduced_.adj[queue[i]]) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    vertices_ = order;
    label_.assign(g.n(), -1);
    // Interchangeable target vertices: complete targets are fully symmetric,
    // bipartite targets are symmetric within each side.
    int t_n = target_.n();
    symmetry_prev_.assign(t_n, -1);
    if (t == MinorTarget::K5 || t == MinorTarget::K4) {
      for (int i = 1; i < t_n; ++i) symmetry_prev_[i] = i - 1;
    } else {
      int side = t == MinorTarget::K33 ? 3 : 2;
      for (int i = 1; i < t_n; ++i) {
        if (i != side) symmetry_prev_[i] = i - 1;
      }
    }
    used_.assign(t_n, 0);
    name_ = minor_target_name(t);
  }

  std::optional<MinorWitness> run() {
    if (static_cast<int>(vertices_.size()) < target_.n()) return std::nullopt;
    if (assign(0)) {
      MinorWitness w;
      w.target = name_;
      w.branch_sets.assign(target_.n(), {});
      for (int v : vertices_) {
        if (label_[v] >= 0) {
          auto& set = w.branch_sets[label_[v]];
          set.insert(set.end(), reduced_.members[v].begin(), reduced_.members[v].end());
        }
      }
      for (auto& set : w.branch_sets) std::sort(set.begin(), set.end());
      return w;
    }
    return std::nullopt;
  }

 private:
  bool assign(std::size_t idx) {
    if (++nodes_ > budget_) throw BudgetExceeded("minor search exceeded node budget");
    int unused = static_cast<int>(std::count(used_.begin(), used_.end(), 0));
    if (static_cast<int>(vertices_.size() - idx) < unused) return false;
    if (idx == vertices_.size()) return complete();
    int v = vertices_[idx];
    for (int lab = 0; lab < target_.n(); ++lab) {
      if (!used_[lab] && symmetry_prev_[lab] >= 0 && !used_[symmetry_prev_[lab]]) continue;
      label_[v] = lab;
      ++used_[lab];
      if (assign(idx + 1)) return true;
      --used_[lab];
    }
    label_[v] = -1;
    return assign(idx + 1);
  }

  bool complete() const {
    int t_n = target_.n();
    if (t_n <= 0) return false;
    // Connectivity of each branch set within the reduced graph.
    for (int lab = 0; lab < t_n; ++lab) {
      std::vector<int> members;
      for (int v : vertices_) {
        if (label_[v] == lab) members.push_back(v);
      }
      if (members.empty()) return false;
      std::vector<int> queue{members.front()};
      std::set<int> seen{members.front()};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int w : reduced_.adj[queue[i]]) {
          if (label_[w] == lab && seen.insert(w).second) queue.push_back(w);
        }
      }
      if (seen.size() != members.size()) return false;
    }
    auto width = static_cast<std::size_t>(t_n);
    std::vector<std::vector<char>> linked(width, std::vector<char>(width, 0));
    for (int v : vertices_) {
      if (label_[v] < 0) continue;
      for (int w : reduced_.adj[v]) {
        if (label_[w] >= 0) linked[label_[v]][label_[w]] = 1;
      }
    }
    for (const auto& e : target_.edges()) {
      if (!linked[e.u][e.v]) return false;
    }
    return true;
  }

  Graph target_;
  Reduced reduced_;
  std::vector<int> vertices_;
  std::vector<int> label_;
  std::vector<int> symmetry_prev_;
  std::vector<int> used_;
  std::string name_;
  unsigned long long budget_;
  unsigned long long nodes_ = 0;
};

}  // namespace

std::optional<MinorWitness> find_minor(const Graph& g, MinorTarget t, unsigned long long node_budget) {
  return MinorSearch(g, t, node_budget).run();
}

std::optional<MinorWitness> find_k33_or_k5_minor(const Graph& g) {
  if (auto w = find_minor(g, MinorTarget::K33)) return w;
  return find_minor(g, MinorTarget::K5);
}

std::optional<MinorWitness> find_outerplanar_obstruction(const Graph& g) {
  if (auto w = find_minor(g, MinorTarget::K4)) return w;
  return find_minor(g, MinorTarget::K23);
}

}  // namespace hompoly
