#include "hompoly/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hompoly/topo.hpp"

namespace hompoly {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges, const std::vector<int>& loops) : Graph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
  for (int v : loops) add_loop(v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
  }
}

int Graph::add_vertex() { return n_++; }

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    add_loop(a);
    return;
  }
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void Graph::add_loop(int v) {
  check_vertex(v);
  loops_.insert(v);
}

void Graph::remove_edge(int a, int b) {
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw MissingEdge("no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  edges_.erase(it);
}

bool Graph::has_edge(int a, int b) const {
  if (a == b) return has_loop(a);
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

void Graph::set_label(const std::string& role, int v) {
  check_vertex(v);
  auto it = labels_.find(role);
  if (it != labels_.end() && it->second != v) throw InvalidInput("role '" + role + "' already assigned");
  labels_[role] = v;
}

std::optional<int> Graph::label(const std::string& role) const {
  auto it = labels_.find(role);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges_.emplace_back(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph Graph::looped_vertex() {
  Graph g(1);
  g.add_loop(0);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph spanning_subgraph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.n(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(vertices.size()));
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.add_edge(index[e.u], index[e.v]);
  }
  for (int v : g.loops()) {
    if (index[v] >= 0) sub.add_loop(index[v]);
  }
  return sub;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
  for (const auto& e : b.edges()) g.add_edge(e.u + a.n(), e.v + a.n());
  for (int v : a.loops()) g.add_loop(v);
  for (int v : b.loops()) g.add_loop(v + a.n());
  return g;
}

GraphClass GraphClass::parse(const std::string& name) {
  if (name == "cycle") return cycle();
  if (name == "clique") return clique();
  if (name == "tree") return tree();
  if (name == "outerplanar") return outerplanar();
  if (name == "planar") return planar();
  if (name == "matching") return perfect_matching();
  if (name.rfind("genus:", 0) == 0) {
    try {
      std::size_t used = 0;
      int k = std::stoi(name.substr(6), &used);
      if (k >= 0 && used == name.size() - 6) return genus_k(k);
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("unknown graph class '" + name + "'");
}

std::string GraphClass::str() const {
  switch (kind) {
    case ClassKind::Cycle: return "cycle";
    case ClassKind::Clique: return "clique";
    case ClassKind::Tree: return "tree";
    case ClassKind::Outerplanar: return "outerplanar";
    case ClassKind::Planar: return "planar";
    case ClassKind::Genus: return "genus:" + std::to_string(genus);
    case ClassKind::PerfectMatching: return "matching";
  }
  return {};
}

bool is_bipartite(const Graph& g) {
  if (!g.loops().empty()) return false;
  auto adj = g.adjacency();
  std::vector<int> color(g.n(), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool hom_to_single_edge(const Graph& g) {
  if (!g.loops().empty()) throw InvalidInput("hom_to_single_edge expects a loopless graph");
  return is_bipartite(g);
}

namespace {

class HomSearch {
 public:
  HomSearch(const Graph& g, const Graph& h, unsigned long long budget)
      : g_(g), h_(h), gadj_(g.adjacency()), budget_(budget) {
    hmat_.assign(h.n(), std::vector<char>(h.n(), 0));
    for (const auto& e : h.edges()) hmat_[e.u][e.v] = hmat_[e.v][e.u] = 1;
    for (int v : h.loops()) hmat_[v][v] = 1;

    // Vertices with edges, highest degree first; each subsequent vertex is
    // preferably adjacent to an earlier one so pruning kicks in early.
    std::vector<int> deg = g.degrees();
    std::vector<char> placed(g.n(), 0);
    std::vector<int> pending;
    for (int v = 0; v < g.n(); ++v) {
      if (deg[v] > 0 || g.has_loop(v)) pending.push_back(v);
    }
    std::stable_sort(pending.begin(), pending.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    while (order_.size() < pending.size()) {
      int best = -1;
      int best_links = -1;
      for (int v : pending) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : gadj_[v]) links += placed[w];
        if (links > best_links) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
    image_.assign(g.n(), -1);
  }

  bool run() {
    if (order_.empty()) return h_.n() > 0 || g_.n() == 0;
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search exceeded node budget");
    int v = order_[depth];
    for (int c = 0; c < h_.n(); ++c) {
      if (g_.has_loop(v) && !hmat_[c][c]) continue;
      bool ok = true;
      for (int w : gadj_[v]) {
        if (image_[w] >= 0 && !hmat_[c][image_[w]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[v] = c;
      if (extend(depth + 1)) return true;
      image_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<int>> gadj_;
  std::vector<std::vector<char>> hmat_;
  std::vector<int> order_;
  std::vector<int> image_;
  unsigned long long budget_;
  unsigned long long nodes_ = 0;
};

}  // namespace

bool is_homomorphic(const Graph& g, const Graph& h, unsigned long long node_budget) {
  return HomSearch(g, h, node_budget).run();
}

HomTester::HomTester(Graph h, unsigned long long node_budget)
    : h_(std::move(h)), budget_(node_budget) {
  has_loop_ = !h_.loops().empty();
  has_edge_ = h_.edge_count() > 0;
  bipartite_ = is_bipartite(h_);
}

bool HomTester::operator()(const Graph& g) const {
  if (has_loop_ && h_.n() > 0) return true;
  if (g.edge_count() == 0 && g.loops().empty()) return h_.n() > 0 || g.n() == 0;
  if (!g.loops().empty()) return false;  // h is loopless here
  if (!has_edge_) return false;
  if (bipartite_) return is_bipartite(g);
  return is_homomorphic(g, h_, budget_);
}

namespace {

// The unique component carrying edges, or nullopt if there are zero or
// several such components.
std::optional<std::vector<int>> nontrivial_component(const Graph& g) {
  std::optional<std::vector<int>> found;
  for (auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    if (found) return std::nullopt;
    found = std::move(comp);
  }
  return found;
}

}  // namespace

bool recognize(const Graph& g, const GraphClass& c, const Budget& budget) {
  if (!g.loops().empty()) return false;
  std::vector<int> deg = g.degrees();

  if (c.kind == ClassKind::PerfectMatching) {
    if (g.n() == 0) return false;
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
  }

  auto comp = nontrivial_component(g);
  if (!comp) return false;
  std::size_t vertices = comp->size();
  std::size_t edges = g.edge_count();

  switch (c.kind) {
    case ClassKind::Cycle:
      return edges == vertices &&
             std::all_of(comp->begin(), comp->end(), [&](int v) { return deg[v] == 2; });
    case ClassKind::Clique:
      return edges == vertices * (vertices - 1) / 2;
    case ClassKind::Tree:
      return edges + 1 == vertices;
    case ClassKind::Outerplanar:
      if (edges <= vertices) return true;  // tree or unicyclic
      if (edges > 2 * vertices - 3) return false;
      return is_outerplanar(induced_subgraph(g, *comp));
    case ClassKind::Planar:
      if (edges <= vertices + 2) return true;  // Kuratowski graphs need cyclomatic number >= 4
      if (vertices >= 3 && edges > 3 * vertices - 6) return false;
      return is_planar(induced_subgraph(g, *comp));
    case ClassKind::Genus: {
      Graph sub = induced_subgraph(g, *comp);
      if (c.genus == 0) return is_planar(sub);
      if (edges <= vertices + 2) return false;
      return graph_genus(sub, c.genus, budget) == c.genus;
    }
    case ClassKind::PerfectMatching:
      break;
  }
  return false;
}

Graph contract_edge(const Graph& g, const Edge& e) {
  if (e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw MissingEdge("contract_edge: (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  auto map = [&](int x) {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  Graph out(g.n() - 1);
  for (const auto& f : g.edges()) {
    int a = map(f.u);
    int b = map(f.v);
    if (a != b) out.add_edge(a, b);
  }
  for (int v : g.loops()) out.add_loop(map(v));
  for (const auto& [role, v] : g.labels()) {
    if (v != e.v) out.set_label(role, map(v));
  }
  return out;
}

int clique_number(const Graph& g) {
  if (g.n() == 0) return 0;
  auto adj = g.adjacency();
  std::vector<std::vector<char>> mat(g.n(), std::vector<char>(g.n(), 0));
  for (const auto& e : g.edges()) mat[e.u][e.v] = mat[e.v][e.u] = 1;
  int best = 1;
  std::vector<int> current;
  std::function<void(int)> grow = [&](int start) {
    best = std::max<int>(best, static_cast<int>(current.size()));
    for (int v = start; v < g.n(); ++v) {
      bool ok = std::all_of(current.begin(), current.end(), [&](int u) { return mat[u][v]; });
      if (!ok) continue;
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace hompoly
