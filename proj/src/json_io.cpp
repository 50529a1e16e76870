#include "hompoly/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hompoly {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(what + ": missing field '" + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + ": expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InvalidInput(what + ": expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + ": expected an array");
  return j;
}

Json edges_json(const std::vector<Edge>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back({e.u, e.v});
  return out;
}

Json varids_json(const std::vector<VarId>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

GateKind parse_gate_kind(const std::string& s) {
  for (GateKind k : {GateKind::Const, GateKind::Var, GateKind::Add, GateKind::Mul, GateKind::Oracle}) {
    if (gate_kind_name(k) == s) return k;
  }
  throw InvalidInput("unknown gate kind '" + s + "'");
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  j["edges"] = edges_json(g.edges());
  Json loops = Json::array();
  for (int v : g.loops()) loops.push_back(v);
  j["loops"] = loops;
  Json labels = Json::object();
  for (const auto& [role, v] : g.labels()) labels[role] = v;
  j["labels"] = labels;
  return j;
}

Graph graph_from_json(const Json& j) {
  const std::string what = "graph";
  int n = as_int(field(j, "n", what), what + ".n");
  if (n < 0) throw InvalidInput("graph.n must be non-negative");
  Graph g(n);
  for (const auto& e : as_array(field(j, "edges", what), "graph.edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("graph.edges: each edge is a pair");
    int a = as_int(e[0], "graph.edges");
    int b = as_int(e[1], "graph.edges");
    if (a == b) throw InvalidInput("graph.edges: self-loops belong in 'loops'");
    if (g.has_edge(a, b)) throw InvalidInput("graph.edges: duplicate edge");
    g.add_edge(a, b);
  }
  if (j.contains("loops")) {
    for (const auto& v : as_array(j.at("loops"), "graph.loops")) g.add_loop(as_int(v, "graph.loops"));
  }
  if (j.contains("labels")) {
    if (!j.at("labels").is_object()) throw InvalidInput("graph.labels: expected an object");
    for (const auto& [role, v] : j.at("labels").items()) g.set_label(role, as_int(v, "graph.labels"));
  }
  return g;
}

Json poly_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json vars = Json::array();
    for (const auto& [v, e] : t.monomial.factors()) vars.push_back({v.str(), e});
    out.push_back({{"coeff", rational_to_string(t.coeff)}, {"vars", vars}});
  }
  return out;
}

Polynomial poly_from_json(const Json& j) {
  std::vector<Term> terms;
  for (const auto& t : as_array(j, "polynomial")) {
    Rational c = parse_rational(as_string(field(t, "coeff", "term"), "term.coeff"));
    std::vector<Monomial::Factor> f;
    for (const auto& ve : as_array(field(t, "vars", "term"), "term.vars")) {
      if (!ve.is_array() || ve.size() != 2) throw InvalidInput("term.vars: each entry is [varid, exponent]");
      int e = as_int(ve[1], "term.vars exponent");
      if (e <= 0) throw InvalidInput("term.vars: exponents must be positive");
      f.emplace_back(VarId::parse(as_string(ve[0], "term.vars varid")), static_cast<unsigned>(e));
    }
    terms.push_back({Monomial::from_factors(std::move(f)), c});
  }
  return Polynomial::from_terms(std::move(terms));
}

Json circuit_to_json(const Circuit& c) {
  Json j;
  j["output"] = c.output();
  Json oracles = Json::array();
  for (const auto& [id, decl] : c.oracles()) oracles.push_back({{"id", id}, {"params", varids_json(decl.params)}});
  j["oracles"] = oracles;
  Json gates = Json::array();
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    Json gj;
    gj["id"] = i;
    gj["kind"] = gate_kind_name(g.kind);
    switch (g.kind) {
      case GateKind::Const: gj["value"] = rational_to_string(g.value); break;
      case GateKind::Var: gj["var"] = g.var.str(); break;
      case GateKind::Oracle: gj["oracle"] = g.oracle; [[fallthrough]];
      default: gj["inputs"] = g.inputs; break;
    }
    gates.push_back(gj);
  }
  j["gates"] = gates;
  return j;
}

Circuit circuit_from_json(const Json& j) {
  std::map<std::string, OracleDecl> oracles;
  if (j.contains("oracles")) {
    for (const auto& o : as_array(j.at("oracles"), "circuit.oracles")) {
      OracleDecl d;
      d.id = as_string(field(o, "id", "oracle"), "oracle.id");
      for (const auto& p : as_array(field(o, "params", "oracle"), "oracle.params")) {
        d.params.push_back(VarId::parse(as_string(p, "oracle.params")));
      }
      oracles.emplace(d.id, std::move(d));
    }
  }
  std::vector<Gate> gates;
  const auto& arr = as_array(field(j, "gates", "circuit"), "circuit.gates");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& gj = arr[i];
    if (gj.contains("id") && as_int(gj.at("id"), "gate.id") != static_cast<int>(i)) {
      throw InvalidInput("circuit.gates: gate ids must be 0..n-1 in order");
    }
    Gate g;
    g.kind = parse_gate_kind(as_string(field(gj, "kind", "gate"), "gate.kind"));
    switch (g.kind) {
      case GateKind::Const: g.value = parse_rational(as_string(field(gj, "value", "gate"), "gate.value")); break;
      case GateKind::Var: g.var = VarId::parse(as_string(field(gj, "var", "gate"), "gate.var")); break;
      case GateKind::Oracle: g.oracle = as_string(field(gj, "oracle", "gate"), "gate.oracle"); [[fallthrough]];
      default:
        for (const auto& in : as_array(field(gj, "inputs", "gate"), "gate.inputs")) {
          g.inputs.push_back(as_int(in, "gate.inputs"));
        }
        break;
    }
    gates.push_back(std::move(g));
  }
  return Circuit::from_parts(std::move(gates), as_int(field(j, "output", "circuit"), "circuit.output"),
                             std::move(oracles));
}

Json rotation_to_json(const RotationSystem& r) {
  Json j = Json::object();
  for (const auto& [v, ring] : r.order()) j[std::to_string(v)] = ring;
  return j;
}

RotationSystem rotation_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("rotation system: expected an object");
  std::map<int, std::vector<int>> order;
  for (const auto& [key, ring] : j.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("rotation system: vertex key '" + key + "' is not an integer");
    }
    std::vector<int> nbrs;
    for (const auto& w : as_array(ring, "rotation ring")) nbrs.push_back(as_int(w, "rotation ring"));
    order.emplace(v, std::move(nbrs));
  }
  return RotationSystem(std::move(order));
}

Json gadget_to_json(const Gadget& g) {
  Json j;
  j["name"] = g.name;
  j["graph"] = graph_to_json(g.graph);
  j["enforced"] = edges_json(g.enforced);
  j["denied"] = edges_json(g.denied);
  j["budget"] = g.budget;
  Json dcs = Json::array();
  for (const auto& dc : g.degree_constraints) {
    dcs.push_back({{"name", dc.name}, {"edges", edges_json(dc.edges)}, {"degree", dc.degree}});
  }
  j["degree_constraints"] = dcs;
  return j;
}

Json classification_to_json(const Classification& c, const Graph& h, const GraphClass& cls) {
  Json j;
  j["h"] = graph_to_json(h);
  j["class"] = cls.str();
  j["complexity"] = complexity_name(c.complexity);
  j["in_vac0"] = c.complexity != Complexity::VNPComplete;
  j["witness"] = c.witness;
  j["caveat"] = c.caveat ? Json(*c.caveat) : Json(nullptr);
  return j;
}

Json report_to_json(const ReductionReport& r, bool include_polynomials) {
  Json j;
  j["lemma_id"] = r.lemma_id;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["equal"] = r.equal;
  if (r.has_polynomial) {
    j["poly_equal"] = r.poly_equal;
    j["produced_terms"] = r.produced.size();
    j["expected_terms"] = r.expected.size();
  }
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  j["notes"] = r.notes;
  j["circuit"] = {{"status", r.circuit.status},
                  {"oracle_binding", r.circuit.oracle_binding},
                  {"size", r.circuit.size},
                  {"oracle_gates", r.circuit.oracle_gates},
                  {"depth", r.circuit.depth},
                  {"nesting_sizes", r.circuit.nesting_sizes}};
  if (include_polynomials && r.has_polynomial) {
    j["produced"] = poly_to_json(r.produced);
    j["expected"] = poly_to_json(r.expected);
  }
  return j;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(source + ": invalid JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace hompoly
