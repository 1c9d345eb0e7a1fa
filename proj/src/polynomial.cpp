#include "milnorkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "milnorkit/error.hpp"

namespace milnorkit {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Merge of two grevlex-descending term lists with coefficient scaling of the
// second operand.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& b_scale, const Monomial* b_shift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto shifted = [&](std::size_t k) {
    return b_shift ? b[k].monomial * *b_shift : b[k].monomial;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = shifted(j);
    if (i == a.size()) {
      out.push_back({mb, b_scale * b[j].coefficient});
      ++j;
      continue;
    }
    auto order = grevlex(a[i].monomial, mb);
    if (order > 0) {
      out.push_back(a[i++]);
    } else if (order < 0) {
      out.push_back({mb, b_scale * b[j].coefficient});
      ++j;
    } else {
      Rational c = a[i].coefficient + b_scale * b[j].coefficient;
      if (c != 0) out.push_back({mb, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VariableContext

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
  if (names.empty()) throw InputError("a variable context needs at least one variable");
  if (names.size() > kMaxVariables) {
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  return std::shared_ptr<const VariableContext>(new VariableContext(std::move(names)));
}

std::shared_ptr<const VariableContext> VariableContext::numbered(std::size_t arity,
                                                                 std::string_view stem) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= arity; ++i) names.push_back(std::string(stem) + std::to_string(i));
  return make(std::move(names));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (power > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
  Monomial m;
  m.exps_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw std::out_of_range("too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0) mask |= (1u << i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw DomainError("monomial division is not exact");
    m.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  }
  m.degree_ = degree_ - divisor.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) {
      // smaller power of the last differing variable wins
      return b.exponent(i) <=> a.exponent(i);
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(ContextPtr context) : context_(std::move(context)) {
  if (!context_) throw std::invalid_argument("null variable context");
}

Polynomial::Polynomial(ContextPtr context, const Rational& constant) : Polynomial(std::move(context)) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial Polynomial::variable(ContextPtr context, std::size_t index) {
  if (index >= context->arity()) throw std::out_of_range("variable index out of range");
  return monomial(std::move(context), Monomial::variable(index));
}

Polynomial Polynomial::monomial(ContextPtr context, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(context));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr context, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex(x.monomial, y.monomial) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  Polynomial p(std::move(context));
  p.terms_ = std::move(merged);
  return p;
}

std::optional<Rational> Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coefficient;
  return std::nullopt;
}

int Polynomial::degree() const {
  // grevlex is graded, so the leading term has maximal degree
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(*this, other);
  terms_ = merge_terms(terms_, other.terms_, Rational(1), nullptr);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(*this, other);
  terms_ = merge_terms(terms_, other.terms_, Rational(-1), nullptr);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.context_);
  if (a.size() < b.size()) return b * a;
  Polynomial out(a.context_);
  // accumulate b.size() shifted copies of a; each pass is a linear merge
  for (const auto& tb : b.terms_) {
    out.terms_ = merge_terms(out.terms_, a.terms_, tb.coefficient, &tb.monomial);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(context_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
  require_same_context(*this, g);
  if (c == 0) return *this;
  return Polynomial(context_, merge_terms(terms_, g.terms_, Rational(-c), &m), true);
}

Polynomial Polynomial::with_context(ContextPtr context) const {
  require_same_arity(context_, context);
  return Polynomial(std::move(context), terms_, true);
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (arity() != other.arity() || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coefficient != other.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Free operations

void require_same_arity(const ContextPtr& a, const ContextPtr& b) {
  if (a->arity() != b->arity()) {
    throw ContextError("variable context mismatch: arity " + std::to_string(a->arity()) + " vs " +
                       std::to_string(b->arity()));
  }
}

void require_same_context(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a.context(), b.context());
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) throw std::out_of_range("partial derivative: variable index out of range");
  std::vector<Term> out;
  out.reserve(p.size());
  Monomial step = Monomial::variable(var);
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial.exponent(var);
    if (e == 0) continue;
    out.push_back({t.monomial / step, t.coefficient * e});
  }
  // lowering one exponent can reorder terms of equal degree
  return Polynomial::from_terms(p.context(), std::move(out));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.arity()) {
    throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) +
                                " coordinates, context has " + std::to_string(p.arity()));
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      for (unsigned e = t.monomial.exponent(i); e > 0; --e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

double evaluate(const Polynomial& p, std::span<const double> point) {
  if (point.size() != p.arity()) throw std::invalid_argument("evaluate: point length mismatch");
  double sum = 0.0;
  for (const auto& t : p.terms()) {
    double v = to_double(t.coefficient);
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = t.monomial.exponent(i); e > 0; --e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Polynomial& value) {
  require_same_context(p, value);
  if (var >= p.arity()) throw std::out_of_range("substitute: variable index out of range");
  Polynomial out(p.context());
  std::vector<Polynomial> powers{Polynomial(p.context(), Rational(1))};
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.monomial / Monomial::variable(var, e);
    out += Polynomial::monomial(p.context(), rest, t.coefficient) * powers[e];
  }
  return out;
}

Homogeneity is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::Kind::zero, 0};
  unsigned d = p.leading_monomial().degree();
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != d) return {Homogeneity::Kind::inhomogeneous, 0};
  }
  return {Homogeneity::Kind::homogeneous, d};
}

std::string to_string(const Monomial& m, const VariableContext& context) {
  std::string out;
  for (std::size_t i = 0; i < context.arity(); ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += context.name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational magnitude = abs(t.coefficient);
    bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += to_string(t.monomial, *p.context());
    }
  }
  return out;
}

}  // namespace milnorkit
