#include "hompoly/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hompoly {

void Gadget::validate() const {
  std::set<Edge> deny(denied.begin(), denied.end());
  for (const auto& e : enforced) {
    if (!graph.has_edge(e.u, e.v)) {
      throw InvalidInput(name + ": enforced edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") missing");
    }
    if (deny.contains(e)) {
      throw InvalidInput(name + ": edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") enforced and denied");
    }
  }
  if (budget < enforced.size()) throw InvalidInput(name + ": budget below enforced edge count");
}

std::vector<Edge> Gadget::free_edges() const {
  std::set<Edge> fixed(enforced.begin(), enforced.end());
  fixed.insert(denied.begin(), denied.end());
  std::vector<Edge> out;
  for (const auto& e : graph.edges()) {
    if (!fixed.contains(e)) out.push_back(e);
  }
  return out;
}

Graph Gadget::effective_graph() const {
  Graph out = graph;
  for (const auto& e : denied) {
    if (out.has_edge(e.u, e.v)) out.remove_edge(e.u, e.v);
  }
  return out;
}

int Gadget::role(const std::string& r) const {
  auto v = graph.label(r);
  if (!v) throw InvalidInput(name + ": no vertex with role '" + r + "'");
  return *v;
}

namespace {

DegreeConstraint glue_constraint(int p, int q, const std::vector<int>& others) {
  DegreeConstraint dc{"glue", {}, 2};
  for (int w : others) {
    dc.edges.emplace_back(p, w);
    dc.edges.emplace_back(q, w);
  }
  std::sort(dc.edges.begin(), dc.edges.end());
  return dc;
}

}  // namespace

Gadget star_gadget(int n, std::optional<std::size_t> budget) {
  if (n < 5) throw InvalidInput("star_gadget needs n >= 5");
  Gadget g;
  g.name = "star-" + std::to_string(n);
  g.graph = Graph::complete(n);
  int p = 1;
  int q = n - 1;
  g.graph.set_label("center", 0);
  g.graph.set_label("glue-p", p);
  g.graph.set_label("glue-q", q);
  for (int v = 1; v < n; ++v) g.enforced.emplace_back(0, v);
  g.denied.emplace_back(p, q);
  g.budget = budget.value_or(static_cast<std::size_t>(2 * n - 3));
  std::vector<int> others;
  for (int w = 2; w < n - 1; ++w) others.push_back(w);
  g.degree_constraints.push_back(glue_constraint(p, q, others));
  g.validate();
  return g;
}

Gadget buddy_transform(const Gadget& star) {
  int c = star.role("center");
  int p = star.role("glue-p");
  int q = star.role("glue-q");
  int n = star.graph.n();
  std::vector<int> outer;
  for (int v = 0; v < n; ++v) {
    if (v != c) outer.push_back(v);
  }
  std::map<int, int> buddy;
  for (std::size_t i = 0; i < outer.size(); ++i) buddy[outer[i]] = n + static_cast<int>(i);

  Gadget g;
  g.name = star.name + "-buddy";
  int total = n + static_cast<int>(outer.size());
  g.graph = Graph::complete(total);
  for (const auto& [role, v] : star.graph.labels()) g.graph.set_label(role, v);
  for (int v : outer) g.graph.set_label("buddy:" + std::to_string(v), buddy[v]);

  for (int v : outer) g.enforced.emplace_back(c, v);
  for (int v : outer) g.enforced.emplace_back(v, buddy[v]);

  std::set<Edge> deny;
  for (int v : outer) {
    deny.emplace(buddy[v], c);
    for (int w : outer) {
      if (w == v) continue;
      deny.emplace(buddy[v], buddy[w]);
      deny.emplace(v, w);
    }
    if (v != p) deny.emplace(v, buddy[p]);
  }
  deny.emplace(p, buddy[q]);
  g.denied.assign(deny.begin(), deny.end());
  g.budget = 3 * outer.size() - 1;

  for (const auto& dc : star.degree_constraints) {
    DegreeConstraint mapped{dc.name, {}, dc.degree};
    for (const auto& e : dc.edges) {
      if (e.u == c || e.v == c) continue;
      mapped.edges.emplace_back(e.u, buddy[e.v]);
      mapped.edges.emplace_back(e.v, buddy[e.u]);
    }
    std::sort(mapped.edges.begin(), mapped.edges.end());
    g.degree_constraints.push_back(std::move(mapped));
  }
  g.validate();
  return g;
}

Gadget planar_gadget(int m) {
  if (m < 3) throw InvalidInput("planar_gadget needs m >= 3");
  Gadget g;
  g.name = "planar-" + std::to_string(m);
  g.graph = Graph(m + 2);
  int a = m;
  int b = m + 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) g.graph.add_edge(i, j);
  }
  for (int v = 0; v < m; ++v) {
    g.graph.add_edge(a, v);
    g.graph.add_edge(b, v);
    g.enforced.emplace_back(a, v);
    g.enforced.emplace_back(b, v);
  }
  std::sort(g.enforced.begin(), g.enforced.end());
  g.graph.set_label("apex-a", a);
  g.graph.set_label("apex-b", b);
  g.budget = static_cast<std::size_t>(2 * m + (m - 1));
  g.validate();
  return g;
}

Gadget with_planar_glue(const Gadget& planar) {
  Gadget g = planar;
  int m = planar.graph.n() - 2;
  int p = 0;
  int q = m - 1;
  g.name = planar.name + "-glued";
  g.graph.set_label("glue-p", p);
  g.graph.set_label("glue-q", q);
  g.denied.emplace_back(p, q);
  std::vector<int> others;
  for (int w = 1; w < m - 1; ++w) others.push_back(w);
  g.degree_constraints.push_back(glue_constraint(p, q, others));
  g.validate();
  return g;
}

Gadget subdivide_and_buddy_planar(const Gadget& glued) {
  int a = glued.role("apex-a");
  int b = glued.role("apex-b");
  int p = glued.role("glue-p");
  int q = glued.role("glue-q");
  int m = glued.graph.n() - 2;
  auto buddy = [&](int v) { return m + 2 + v; };
  auto sub_a = [&](int v) { return 2 * m + 2 + v; };
  auto sub_b = [&](int v) { return 3 * m + 2 + v; };

  Gadget g;
  g.name = glued.name + "-bipartite";
  g.graph = Graph(4 * m + 2);
  g.graph.set_label("apex-a", a);
  g.graph.set_label("apex-b", b);
  g.graph.set_label("glue-p", p);
  g.graph.set_label("glue-q", q);
  for (int v = 0; v < m; ++v) {
    g.graph.set_label("buddy:" + std::to_string(v), buddy(v));
    g.graph.set_label("sub-a:" + std::to_string(v), sub_a(v));
    g.graph.set_label("sub-b:" + std::to_string(v), sub_b(v));
    for (auto [x, y] : {std::pair{a, sub_a(v)}, {sub_a(v), v}, {b, sub_b(v)}, {sub_b(v), v}, {v, buddy(v)},
                        {a, buddy(v)}, {b, buddy(v)}}) {
      g.graph.add_edge(x, y);
      g.enforced.emplace_back(x, y);
    }
  }
  for (int v = 0; v < m; ++v) {
    for (int w = 0; w < m; ++w) {
      if (v != w) g.graph.add_edge(v, buddy(w));
    }
  }
  std::sort(g.enforced.begin(), g.enforced.end());

  std::set<Edge> deny;
  for (int v = 0; v < m; ++v) {
    if (v != p) deny.emplace(v, buddy(p));
    if (v != q) deny.emplace(q, buddy(v));
  }
  deny.emplace(p, buddy(q));
  g.denied.assign(deny.begin(), deny.end());
  g.budget = static_cast<std::size_t>(7 * m + (m - 1));

  for (const auto& dc : glued.degree_constraints) {
    DegreeConstraint mapped{dc.name, {}, dc.degree};
    for (const auto& e : dc.edges) {
      if (e.u >= m || e.v >= m) continue;
      mapped.edges.emplace_back(e.u, buddy(e.v));
      mapped.edges.emplace_back(e.v, buddy(e.u));
    }
    std::sort(mapped.edges.begin(), mapped.edges.end());
    g.degree_constraints.push_back(std::move(mapped));
  }
  g.validate();
  return g;
}

Gadget genus_block(bool subdivided) {
  static const std::vector<std::pair<int, int>> kEdges = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8},
                                                         {8, 5}, {1, 3}, {2, 4}, {5, 1}, {6, 2}, {7, 3}, {8, 4}};
  Gadget g;
  g.name = subdivided ? "genus-block-subdivided" : "genus-block";
  g.graph = Graph(subdivided ? 10 : 8);
  for (auto [x, y] : kEdges) {
    if (subdivided && x == 1 && y == 3) {
      g.graph.add_edge(0, 8);
      g.graph.add_edge(8, 2);
    } else if (subdivided && x == 2 && y == 4) {
      g.graph.add_edge(1, 9);
      g.graph.add_edge(9, 3);
    } else {
      g.graph.add_edge(x - 1, y - 1);
    }
  }
  for (int j = 1; j <= g.graph.n(); ++j) g.graph.set_label("block0:" + std::to_string(j), j - 1);
  g.enforced = g.graph.edges();
  g.budget = g.enforced.size();
  g.validate();
  return g;
}

Gadget amalgam_chain(int k, std::optional<int> attach_planar, bool subdivided) {
  if (k < 1) throw InvalidInput("amalgam_chain needs k >= 1");
  Gadget block = genus_block(subdivided);
  int per_block = block.graph.n();

  Gadget g;
  g.name = "chain-" + std::to_string(k) + (subdivided ? "-subdivided" : "");
  g.graph = Graph(0);
  std::vector<int> previous;
  for (int i = 0; i < k; ++i) {
    std::vector<int> map(per_block);
    for (int r = 0; r < per_block; ++r) map[r] = (i > 0 && r == 4) ? previous[7] : g.graph.add_vertex();
    for (const auto& e : block.graph.edges()) g.graph.add_edge(map[e.u], map[e.v]);
    for (int j = 1; j <= per_block; ++j) {
      g.graph.set_label("block" + std::to_string(i) + ":" + std::to_string(j), map[j - 1]);
    }
    previous = std::move(map);
  }
  g.enforced = g.graph.edges();
  g.budget = g.enforced.size();

  if (attach_planar) {
    Gadget planar = with_planar_glue(planar_gadget(*attach_planar));
    if (subdivided) planar = subdivide_and_buddy_planar(planar);
    int q = planar.role("glue-q");
    int junction = chain_vertex(g, 0, 5);
    std::vector<int> map(planar.graph.n());
    for (int v = 0; v < planar.graph.n(); ++v) map[v] = v == q ? junction : g.graph.add_vertex();
    auto image = [&](const Edge& e) { return Edge(map[e.u], map[e.v]); };
    for (const auto& e : planar.graph.edges()) g.graph.add_edge(map[e.u], map[e.v]);
    for (const auto& e : planar.enforced) g.enforced.push_back(image(e));
    for (const auto& e : planar.denied) g.denied.push_back(image(e));
    for (const auto& dc : planar.degree_constraints) {
      DegreeConstraint mapped{dc.name, {}, dc.degree};
      for (const auto& e : dc.edges) mapped.edges.push_back(image(e));
      std::sort(mapped.edges.begin(), mapped.edges.end());
      g.degree_constraints.push_back(std::move(mapped));
    }
    for (const auto& [role, v] : planar.graph.labels()) g.graph.set_label(role, map[v]);
    g.graph.set_label("mid:" + std::to_string(*attach_planar - 1), junction);
    for (int v = 0; v < *attach_planar - 1; ++v) g.graph.set_label("mid:" + std::to_string(v), map[v]);
    g.budget += planar.budget;
    g.name += "+" + planar.name;
  }
  std::sort(g.enforced.begin(), g.enforced.end());
  std::sort(g.denied.begin(), g.denied.end());
  g.validate();
  return g;
}

int chain_vertex(const Gadget& chain, int block, int j) {
  return chain.role("block" + std::to_string(block) + ":" + std::to_string(j));
}

bool fold_block_to_edge_certificate(const Gadget& g) { return is_bipartite(g.effective_graph()); }

RotationSystem chain_rotation(const Gadget& chain, const RotationSystem& block_embedding) {
  int k = 0;
  while (chain.graph.label("block" + std::to_string(k) + ":1")) ++k;
  if (k == 0) throw InvalidInput("chain_rotation: not an amalgam chain");
  int per_block = static_cast<int>(block_embedding.order().size());
  RotationSystem acc;
  for (int i = 0; i < k; ++i) {
    std::map<int, int> map;
    for (int j = 1; j <= per_block; ++j) map[j - 1] = chain_vertex(chain, i, j);
    std::map<int, std::vector<int>> order;
    for (const auto& [v, ring] : block_embedding.order()) {
      auto& out = order[map.at(v)];
      for (int w : ring) out.push_back(map.at(w));
    }
    RotationSystem local(std::move(order));
    acc = i == 0 ? local : amalgamate_rotations(acc, local, chain_vertex(chain, i, 5));
  }
  return acc;
}

}  // namespace hompoly
