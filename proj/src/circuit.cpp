#include "hompoly/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace hompoly {

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Const: return "const";
    case GateKind::Var: return "var";
    case GateKind::Add: return "add";
    case GateKind::Mul: return "mul";
    case GateKind::Oracle: return "oracle";
  }
  return "?";
}

Circuit Circuit::from_parts(std::vector<Gate> gates, int output, std::map<std::string, OracleDecl> oracles) {
  int n = static_cast<int>(gates.size());
  if (output < 0 || output >= n) throw InvalidInput("circuit output out of range");
  for (int i = 0; i < n; ++i) {
    const Gate& g = gates[i];
    for (int in : g.inputs) {
      if (in < 0 || in >= i) throw InvalidInput("gate " + std::to_string(i) + " is not in topological order");
    }
    switch (g.kind) {
      case GateKind::Const:
      case GateKind::Var:
        if (!g.inputs.empty()) throw InvalidInput("leaf gate " + std::to_string(i) + " has inputs");
        break;
      case GateKind::Add:
      case GateKind::Mul:
        if (g.inputs.empty()) throw InvalidInput("gate " + std::to_string(i) + " has no inputs");
        break;
      case GateKind::Oracle: {
        auto it = oracles.find(g.oracle);
        if (it == oracles.end()) throw InvalidInput("undeclared oracle '" + g.oracle + "'");
        if (it->second.params.size() != g.inputs.size()) {
          throw InvalidInput("oracle '" + g.oracle + "' expects " + std::to_string(it->second.params.size()) +
                             " inputs, gate " + std::to_string(i) + " has " + std::to_string(g.inputs.size()));
        }
        break;
      }
    }
  }
  std::vector<char> reached(n, 0);
  reached[output] = 1;
  for (int i = output; i >= 0; --i) {
    if (!reached[i]) continue;
    for (int in : gates[i].inputs) reached[in] = 1;
  }
  if (output != n - 1 || std::find(reached.begin(), reached.end(), 0) != reached.end()) {
    throw InvalidInput("circuit has gates unreachable from the output");
  }
  Circuit c;
  c.gates_ = std::move(gates);
  c.output_ = output;
  c.oracles_ = std::move(oracles);
  return c;
}

std::size_t Circuit::size() const {
  return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.kind == GateKind::Add || g.kind == GateKind::Mul || g.kind == GateKind::Oracle;
  }));
}

std::size_t Circuit::oracle_gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::Oracle; }));
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> d(gates_.size(), 0);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].inputs.empty()) continue;
    std::size_t m = 0;
    for (int in : gates_[i].inputs) m = std::max(m, d[in]);
    d[i] = m + 1;
  }
  return gates_.empty() ? 0 : d[output_];
}

void CircuitBuilder::declare_oracle(const OracleDecl& decl) {
  auto [it, inserted] = oracles_.emplace(decl.id, decl);
  if (!inserted && it->second.params != decl.params) {
    throw InvalidInput("oracle '" + decl.id + "' redeclared with different parameters");
  }
}

const OracleDecl& CircuitBuilder::oracle_decl(const std::string& id) const {
  auto it = oracles_.find(id);
  if (it == oracles_.end()) throw UnboundOracle("undeclared oracle '" + id + "'");
  return it->second;
}

int CircuitBuilder::intern(Gate g) {
  std::ostringstream key;
  key << static_cast<int>(g.kind) << '|';
  switch (g.kind) {
    case GateKind::Const: key << rational_to_string(g.value); break;
    case GateKind::Var: key << g.var.str(); break;
    case GateKind::Oracle: key << g.oracle; break;
    default: break;
  }
  for (int in : g.inputs) key << ',' << in;
  auto [it, inserted] = index_.emplace(key.str(), static_cast<int>(gates_.size()));
  if (inserted) gates_.push_back(std::move(g));
  return it->second;
}

int CircuitBuilder::constant(const Rational& c) {
  Gate g;
  g.kind = GateKind::Const;
  g.value = c;
  g.value.canonicalize();
  return intern(std::move(g));
}

int CircuitBuilder::var(VarId v) {
  Gate g;
  g.kind = GateKind::Var;
  g.var = v;
  return intern(std::move(g));
}

int CircuitBuilder::add(std::vector<int> inputs) {
  if (inputs.empty()) return constant(0);
  if (inputs.size() == 1) return inputs.front();
  std::sort(inputs.begin(), inputs.end());
  Gate g;
  g.kind = GateKind::Add;
  g.inputs = std::move(inputs);
  return intern(std::move(g));
}

int CircuitBuilder::mul(std::vector<int> inputs) {
  if (inputs.empty()) return constant(1);
  if (inputs.size() == 1) return inputs.front();
  std::sort(inputs.begin(), inputs.end());
  Gate g;
  g.kind = GateKind::Mul;
  g.inputs = std::move(inputs);
  return intern(std::move(g));
}

int CircuitBuilder::oracle(const std::string& id, std::vector<int> inputs) {
  const OracleDecl& decl = oracle_decl(id);
  if (decl.params.size() != inputs.size()) throw InvalidInput("oracle '" + id + "' arity mismatch");
  Gate g;
  g.kind = GateKind::Oracle;
  g.oracle = id;
  g.inputs = std::move(inputs);
  return intern(std::move(g));
}

Circuit CircuitBuilder::finalize(int output) const {
  if (output < 0 || output >= static_cast<int>(gates_.size())) throw InvalidInput("finalize: bad output gate");
  std::vector<char> reached(gates_.size(), 0);
  reached[output] = 1;
  for (int i = output; i >= 0; --i) {
    if (!reached[i]) continue;
    for (int in : gates_[i].inputs) reached[in] = 1;
  }
  std::vector<int> remap(gates_.size(), -1);
  std::vector<Gate> kept;
  std::map<std::string, OracleDecl> used;
  for (int i = 0; i <= output; ++i) {
    if (!reached[i]) continue;
    Gate g = gates_[i];
    for (int& in : g.inputs) in = remap[in];
    if (g.kind == GateKind::Oracle) used.emplace(g.oracle, oracles_.at(g.oracle));
    remap[i] = static_cast<int>(kept.size());
    kept.push_back(std::move(g));
  }
  int out = remap[output];
  return Circuit::from_parts(std::move(kept), out, std::move(used));
}

Polynomial eval_symbolic(const Circuit& c, const std::map<std::string, Polynomial>& oracles, const EvalLimits& limits) {
  for (const auto& [id, decl] : c.oracles()) {
    if (!oracles.contains(id)) throw UnboundOracle("oracle '" + id + "' is not bound");
  }
  const auto& gates = c.gates();
  std::vector<int> remaining(gates.size(), 0);
  for (const auto& g : gates) {
    for (int in : g.inputs) ++remaining[in];
  }
  std::vector<Polynomial> value(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    Polynomial v;
    switch (g.kind) {
      case GateKind::Const: v = Polynomial::constant(g.value); break;
      case GateKind::Var: v = Polynomial::variable(g.var); break;
      case GateKind::Add:
        for (int in : g.inputs) v += value[in];
        break;
      case GateKind::Mul:
        v = Polynomial::constant(1);
        for (int in : g.inputs) v = v * value[in];
        break;
      case GateKind::Oracle: {
        const OracleDecl& decl = c.oracles().at(g.oracle);
        std::map<VarId, Polynomial> images;
        for (std::size_t k = 0; k < decl.params.size(); ++k) images.emplace(decl.params[k], value[g.inputs[k]]);
        v = substitute(oracles.at(g.oracle), images);
        break;
      }
    }
    if (v.size() > limits.max_terms) {
      throw BudgetExceeded("gate " + std::to_string(i) + " has " + std::to_string(v.size()) + " terms");
    }
    if (v.degree() > limits.max_degree) {
      throw BudgetExceeded("gate " + std::to_string(i) + " exceeds degree budget " + std::to_string(limits.max_degree));
    }
    value[i] = std::move(v);
    for (int in : g.inputs) {
      if (--remaining[in] == 0) value[in] = Polynomial();
    }
  }
  return value[c.output()];
}

PolyFn oracle_fn(const OracleDecl& decl) {
  return [decl](CircuitBuilder& b, const std::map<VarId, int>& in) {
    b.declare_oracle(decl);
    std::vector<int> args;
    args.reserve(decl.params.size());
    for (const auto& p : decl.params) {
      auto it = in.find(p);
      args.push_back(it != in.end() ? it->second : b.var(p));
    }
    return b.oracle(decl.id, std::move(args));
  };
}

std::vector<Rational> interpolation_weights(unsigned k, unsigned delta) {
  if (k > delta) throw InvalidInput("homogeneous degree exceeds degree bound");
  std::vector<Rational> weights(delta + 1);
  for (unsigned j = 0; j <= delta; ++j) {
    // Coefficients of prod_{i != j} (t - i) / (j - i), lowest degree first.
    std::vector<Rational> basis{Rational(1)};
    for (unsigned i = 0; i <= delta; ++i) {
      if (i == j) continue;
      Rational denom = Rational(static_cast<long>(j)) - Rational(static_cast<long>(i));
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d] / denom;
        next[d] -= basis[d] * Rational(static_cast<long>(i)) / denom;
      }
      basis = std::move(next);
    }
    weights[j] = basis[k];
  }
  return weights;
}

PolyFn homc_fn(PolyFn inner, VarSet vars, unsigned k, unsigned delta) {
  std::vector<Rational> w = interpolation_weights(k, delta);
  return [inner = std::move(inner), vars = std::move(vars), w, delta](CircuitBuilder& b,
                                                                     const std::map<VarId, int>& in) {
    std::vector<int> summands;
    for (unsigned j = 0; j <= delta; ++j) {
      std::map<VarId, int> point = in;
      for (const auto& v : vars) {
        auto it = in.find(v);
        int src = it != in.end() ? it->second : b.var(v);
        if (j == 0) {
          point[v] = b.constant(0);
        } else if (j == 1) {
          point[v] = src;
        } else {
          point[v] = b.mul({b.constant(static_cast<long>(j)), src});
        }
      }
      int at = inner(b, point);
      summands.push_back(w[j] == 1 ? at : b.mul({b.constant(w[j]), at}));
    }
    return b.add(std::move(summands));
  };
}

PolyFn fix_fn(PolyFn inner, std::map<VarId, Rational> values) {
  return [inner = std::move(inner), values = std::move(values)](CircuitBuilder& b, const std::map<VarId, int>& in) {
    std::map<VarId, int> point = in;
    for (const auto& [v, c] : values) point[v] = b.constant(c);
    return inner(b, point);
  };
}

PolyFn rename_fn(PolyFn inner, std::map<VarId, VarId> renames) {
  return [inner = std::move(inner), renames = std::move(renames)](CircuitBuilder& b, const std::map<VarId, int>& in) {
    std::map<VarId, int> point = in;
    for (const auto& [from, to] : renames) {
      auto it = in.find(to);
      point[from] = it != in.end() ? it->second : b.var(to);
    }
    return inner(b, point);
  };
}

PolyFn scale_fn(PolyFn inner, const Rational& c) {
  return [inner = std::move(inner), c](CircuitBuilder& b, const std::map<VarId, int>& in) {
    int v = inner(b, in);
    return b.mul({b.constant(c), v});
  };
}

Circuit build_circuit(const PolyFn& fn, const std::vector<OracleDecl>& decls) {
  CircuitBuilder b;
  for (const auto& d : decls) b.declare_oracle(d);
  int out = fn(b, {});
  return b.finalize(out);
}

Circuit extract_homc(const OracleDecl& oracle, const VarSet& vars, unsigned k, unsigned delta) {
  if (k > delta) throw InvalidInput("extract_homc requires k <= delta");
  return build_circuit(homc_fn(oracle_fn(oracle), vars, k, delta), {oracle});
}

}  // namespace hompoly
