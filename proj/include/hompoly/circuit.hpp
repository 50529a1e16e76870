#pragma once

// Arithmetic circuits with oracle gates. Oracle gates stay opaque until
// eval_symbolic, where the bound polynomial is instantiated at the gate's
// input polynomials.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hompoly/errors.hpp"
#include "hompoly/poly.hpp"

namespace hompoly {

enum class GateKind { Const, Var, Add, Mul, Oracle };

std::string gate_kind_name(GateKind k);

struct Gate {
  GateKind kind = GateKind::Const;
  Rational value;           // Const
  VarId var;                // Var
  std::string oracle;       // Oracle
  std::vector<int> inputs;  // Add, Mul, Oracle (ordered)
};

/// An oracle's formal parameters: input i of an Oracle gate is substituted
/// for params[i].
struct OracleDecl {
  std::string id;
  std::vector<VarId> params;
};

class Circuit {
 public:
  // Validates topological order (inputs precede their gate), oracle arity,
  // single output and reachability. Throws InvalidInput.
  static Circuit from_parts(std::vector<Gate> gates, int output, std::map<std::string, OracleDecl> oracles);

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  int output() const noexcept { return output_; }
  const std::map<std::string, OracleDecl>& oracles() const noexcept { return oracles_; }

  // Add, Mul and Oracle gates; leaves are free.
  std::size_t size() const;
  std::size_t oracle_gate_count() const;
  // Longest input-to-output path counted in non-leaf gates.
  std::size_t depth() const;

 private:
  std::vector<Gate> gates_;
  int output_ = -1;
  std::map<std::string, OracleDecl> oracles_;
};

/// Builds circuits bottom-up. Identical gates are shared (hash-consed), so
/// a Const or Var leaf appears once however often it is requested.
class CircuitBuilder {
 public:
  void declare_oracle(const OracleDecl& decl);
  const OracleDecl& oracle_decl(const std::string& id) const;

  int constant(const Rational& c);
  int var(VarId v);
  int add(std::vector<int> inputs);
  int mul(std::vector<int> inputs);
  int oracle(const std::string& id, std::vector<int> inputs);

  // Drops gates not reachable from `output` and renumbers.
  Circuit finalize(int output) const;

 private:
  int intern(Gate g);

  std::vector<Gate> gates_;
  std::map<std::string, int> index_;
  std::map<std::string, OracleDecl> oracles_;
};

struct EvalLimits {
  unsigned max_degree = 96;
  std::size_t max_terms = 4'000'000;
};

// Throws UnboundOracle for a missing binding and BudgetExceeded when a gate
// value exceeds the limits.
Polynomial eval_symbolic(const Circuit& c, const std::map<std::string, Polynomial>& oracles,
                         const EvalLimits& limits = {});

/// A polynomial expressed as a circuit fragment over abstract inputs:
/// given gates for (some of) its variables, emits its value and returns the
/// gate id. Unmapped variables read their own Var leaf.
using PolyFn = std::function<int(CircuitBuilder&, const std::map<VarId, int>&)>;

PolyFn oracle_fn(const OracleDecl& decl);

// Homogeneous component of degree k in `vars`, for an inner polynomial of
// degree at most delta in those variables: sum_j w_j * inner(t_j * vars)
// over nodes t_j = 0..delta with w_j the t^k coefficient of the Lagrange
// basis polynomial at t_j.
PolyFn homc_fn(PolyFn inner, VarSet vars, unsigned k, unsigned delta);

// Inner polynomial with the given variables replaced by constants.
PolyFn fix_fn(PolyFn inner, std::map<VarId, Rational> values);

// Inner polynomial with variables renamed (several may map to one target).
PolyFn rename_fn(PolyFn inner, std::map<VarId, VarId> renames);

PolyFn scale_fn(PolyFn inner, const Rational& c);

// Lagrange weights for nodes 0..delta at degree k.
std::vector<Rational> interpolation_weights(unsigned k, unsigned delta);

// Circuit for the degree-k component of an oracle in `vars`, with delta + 1
// oracle gates. Requires k <= delta.
Circuit extract_homc(const OracleDecl& oracle, const VarSet& vars, unsigned k, unsigned delta);

// Builds a whole circuit from a PolyFn whose leaf oracles are `decls`.
Circuit build_circuit(const PolyFn& fn, const std::vector<OracleDecl>& decls);

// Recorded constant for size(extract_homc) <= C * (|vars| + 1) * (delta + 1).
inline constexpr std::size_t kHomcSizeConstant = 3;

}  // namespace hompoly
