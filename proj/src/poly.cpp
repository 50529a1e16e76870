#include "hompoly/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hompoly/errors.hpp"

namespace hompoly {

namespace {

// Interned auxiliary variable names. Ids are stable for the process lifetime.
class AuxNames {
 public:
  static AuxNames& instance() {
    static AuxNames names;
    return names;
  }

  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  const std::string& name(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    return names_.at(id);
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

int parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) throw InvalidInput("bad variable index '" + std::string(s) + "'");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw InvalidInput("bad variable index '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw InvalidInput("bad rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

// ---- VarId ----------------------------------------------------------------

VarId VarId::edge(int i, int j) {
  if (i < 0 || j < 0 || i == j) throw InvalidInput("edge variable needs two distinct vertices");
  VarId v;
  v.kind_ = VarKind::Edge;
  v.a_ = static_cast<std::uint32_t>(std::min(i, j));
  v.b_ = static_cast<std::uint32_t>(std::max(i, j));
  return v;
}

VarId VarId::loop(int j) {
  if (j < 0) throw InvalidInput("negative vertex");
  VarId v;
  v.kind_ = VarKind::Loop;
  v.a_ = static_cast<std::uint32_t>(j);
  return v;
}

VarId VarId::vertex(int j) {
  if (j < 0) throw InvalidInput("negative vertex");
  VarId v;
  v.kind_ = VarKind::Vertex;
  v.a_ = static_cast<std::uint32_t>(j);
  return v;
}

VarId VarId::aux(std::string_view name) {
  if (name.empty()) throw InvalidInput("empty auxiliary variable name");
  VarId v;
  v.kind_ = VarKind::Aux;
  v.a_ = AuxNames::instance().intern(name);
  return v;
}

VarId VarId::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') throw InvalidInput("bad variable '" + std::string(text) + "'");
  std::string_view rest = text.substr(2);
  switch (text[0]) {
    case 'e': {
      auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw InvalidInput("bad edge variable '" + std::string(text) + "'");
      return edge(parse_index(rest.substr(0, colon)), parse_index(rest.substr(colon + 1)));
    }
    case 'l':
      return loop(parse_index(rest));
    case 'v':
      return vertex(parse_index(rest));
    case 'y':
      return aux(rest);
    default:
      throw InvalidInput("bad variable '" + std::string(text) + "'");
  }
}

const std::string& VarId::aux_name() const { return AuxNames::instance().name(a_); }

std::string VarId::str() const {
  switch (kind_) {
    case VarKind::Edge:
      return "e:" + std::to_string(a_) + ":" + std::to_string(b_);
    case VarKind::Loop:
      return "l:" + std::to_string(a_);
    case VarKind::Vertex:
      return "v:" + std::to_string(a_);
    case VarKind::Aux:
      return "y:" + aux_name();
  }
  return {};
}

std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == VarKind::Aux) {
    if (a.a_ == b.a_) return std::strong_ordering::equal;
    int c = a.aux_name().compare(b.aux_name());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.a_ != b.a_) return a.a_ <=> b.a_;
  return a.b_ <=> b.b_;
}

// ---- Monomial -------------------------------------------------------------

Monomial::Monomial(VarId v, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::degree_in(const VarSet& vars) const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) {
    if (vars.contains(v)) d += e;
  }
  return d;
}

unsigned Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VarId& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::is_multilinear() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second == 1; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [va, ea] = a.factors_[i];
    const auto& [vb, eb] = b.factors_[i];
    if (va != vb) {
      // The monomial carrying the smaller variable has the larger exponent there.
      return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (ea != eb) return ea <=> eb;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---- Polynomial -----------------------------------------------------------

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarId v) { return monomial(Monomial(v), 1); }

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned Polynomial::degree_in(const VarSet& vars) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(vars));
  return d;
}

VarSet Polynomial::variables() const {
  VarSet vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.insert(f.first);
  }
  return vars;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

bool Polynomial::is_multilinear() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.monomial.is_multilinear(); });
}

bool Polynomial::is_zero_one() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff == 1; });
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->monomial < j->monomial)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->monomial < i->monomial) {
      out.push_back(*j++);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial p = a;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    if (t.monomial.is_one()) {
      out << rational_to_string(t.coeff);
    } else {
      if (t.coeff != 1) out << rational_to_string(t.coeff) << '*';
      out << t.monomial.str();
    }
  }
  return out.str();
}

Polynomial scale(const Polynomial& p, const Rational& c) {
  if (c == 0) return {};
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) t.coeff *= c;
  return Polynomial::from_terms(std::move(terms));
}

namespace {

bool all_single_terms(const std::map<VarId, Polynomial>& images) {
  return std::all_of(images.begin(), images.end(),
                     [](const auto& kv) { return kv.second.size() <= 1; });
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& images) {
  if (images.empty() || p.is_zero()) return p;

  if (all_single_terms(images)) {
    // Every image is c*m (or zero), so each term maps to at most one term.
    std::vector<Term> out;
    out.reserve(p.size());
    std::vector<Monomial::Factor> factors;
    for (const auto& t : p.terms()) {
      Rational c = t.coeff;
      factors.clear();
      bool killed = false;
      for (const auto& [v, e] : t.monomial.factors()) {
        auto it = images.find(v);
        if (it == images.end()) {
          factors.emplace_back(v, e);
          continue;
        }
        if (it->second.is_zero()) {
          killed = true;
          break;
        }
        const Term& img = it->second.terms().front();
        for (unsigned k = 0; k < e; ++k) c *= img.coeff;
        for (const auto& [w, f] : img.monomial.factors()) factors.emplace_back(w, f * e);
      }
      if (killed) continue;
      out.push_back({Monomial::from_factors(factors), c});
    }
    return Polynomial::from_terms(std::move(out));
  }

  std::map<std::pair<VarId, unsigned>, Polynomial> powers;
  auto image_power = [&](VarId v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = images.find(v);
    Polynomial value = img == images.end() ? Polynomial::monomial(Monomial(v, e)) : power(img->second, e);
    return powers.emplace(key, std::move(value)).first->second;
  };

  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(t.coeff);
    for (const auto& [v, e] : t.monomial.factors()) {
      prod *= image_power(v, e);
      if (prod.is_zero()) break;
    }
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(std::move(acc));
}

Polynomial filter_terms(const Polynomial& p, const std::function<bool(const Monomial&)>& keep) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (keep(t.monomial)) out.push_back(t);
  }
  // Order is preserved, so the result is already canonical.
  return Polynomial::from_terms(std::move(out));
}

Polynomial homc_direct(const Polynomial& p, const VarSet& vars, unsigned k) {
  return filter_terms(p, [&](const Monomial& m) { return m.degree_in(vars) == k; });
}

Polynomial divide_exact(const Polynomial& p, const Rational& c) {
  if (c == 0) throw DivisionByZero("divide_exact by zero");
  Rational inv = 1 / c;
  return scale(p, inv);
}

Rational evaluate(const Polynomial& p, const std::map<VarId, Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw InvalidInput("evaluate: no value for " + v.str());
      for (unsigned k = 0; k < e; ++k) prod *= it->second;
    }
    sum += prod;
  }
  return sum;
}

}  // namespace hompoly
