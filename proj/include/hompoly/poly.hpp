#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// Variables are tagged: edge variables x_{i,j} (i<j), loop variables x_j,
// vertex variables x_v and named auxiliary variables. Terms are kept sorted
// in graded lexicographic order over the variable order
// Edge < Loop < Vertex < Aux, so equality is structural and printed forms
// are byte-stable.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hompoly {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

enum class VarKind : std::uint8_t { Edge = 0, Loop = 1, Vertex = 2, Aux = 3 };

class VarId {
 public:
  VarId() = default;

  static VarId edge(int i, int j);
  static VarId loop(int j);
  static VarId vertex(int v);
  static VarId aux(std::string_view name);
  // "e:i:j", "l:j", "v:i", "y:name"
  static VarId parse(std::string_view text);

  VarKind kind() const noexcept { return kind_; }
  bool is_edge() const noexcept { return kind_ == VarKind::Edge; }
  // Edge: smaller endpoint. Loop/Vertex: the vertex.
  int first() const noexcept { return static_cast<int>(a_); }
  // Edge: larger endpoint.
  int second() const noexcept { return static_cast<int>(b_); }
  const std::string& aux_name() const;

  std::string str() const;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b);

 private:
  VarKind kind_ = VarKind::Edge;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

using VarSet = std::set<VarId>;

class Monomial {
 public:
  using Factor = std::pair<VarId, unsigned>;

  Monomial() = default;
  explicit Monomial(VarId v, unsigned exponent = 1);
  // Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned degree_in(const VarSet& vars) const;
  unsigned exponent(VarId v) const;
  bool contains(VarId v) const { return exponent(v) != 0; }
  bool is_one() const noexcept { return factors_.empty(); }
  bool is_multilinear() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  // Graded lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Rational& c);
  static Polynomial variable(VarId v);
  static Polynomial monomial(Monomial m, const Rational& c = 1);
  // Accepts terms in any order; merges equal monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;
  unsigned degree_in(const VarSet& vars) const;
  VarSet variables() const;
  Rational coefficient(const Monomial& m) const;
  bool is_multilinear() const;
  // True iff every coefficient equals 1.
  bool is_zero_one() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);

// Simultaneous substitution. Unmapped variables are left alone.
Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& images);

// Sum of the terms whose degree restricted to `vars` is exactly k.
Polynomial homc_direct(const Polynomial& p, const VarSet& vars, unsigned k);

Polynomial filter_terms(const Polynomial& p, const std::function<bool(const Monomial&)>& keep);

// Divides every coefficient by c. Throws DivisionByZero for c == 0.
Polynomial divide_exact(const Polynomial& p, const Rational& c);

Rational evaluate(const Polynomial& p, const std::map<VarId, Rational>& point);

}  // namespace hompoly
