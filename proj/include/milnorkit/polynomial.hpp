#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// Every polynomial lives in a VariableContext. Variables are identified by
// position; names only matter for parsing and printing, so two objects are
// compatible iff their contexts have the same arity. Terms are kept sorted
// in descending graded reverse lexicographic order with no zero
// coefficients, which makes structural equality the mathematical one.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "milnorkit/rational.hpp"

namespace milnorkit {

inline constexpr std::size_t kMaxVariables = 16;

class VariableContext {
 public:
  /// Names must be distinct, non-empty identifiers; at least one and at
  /// most kMaxVariables of them.
  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

  /// x1, ..., xn
  static std::shared_ptr<const VariableContext> numbered(std::size_t arity,
                                                         std::string_view stem = "x");

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned exponent(std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Bit i is set iff variable i occurs.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

  bool operator==(const Monomial& other) const = default;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison (x1 > x2 > ... > xn).
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex(a, b) > 0; }
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  /// The zero polynomial.
  explicit Polynomial(ContextPtr context);
  Polynomial(ContextPtr context, const Rational& constant);

  static Polynomial variable(ContextPtr context, std::size_t index);
  static Polynomial monomial(ContextPtr context, const Monomial& m, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(ContextPtr context, std::vector<Term> terms);

  const ContextPtr& context() const { return context_; }
  std::size_t arity() const { return context_->arity(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// The value of a constant polynomial, nullopt otherwise.
  std::optional<Rational> constant_value() const;

  /// Largest term in grevlex; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned exponent) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// this - c * m * g, computed in a single merge pass.
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const;

  /// Same terms over another context of equal arity.
  Polynomial with_context(ContextPtr context) const;

  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(ContextPtr context, std::vector<Term> sorted_terms, bool /*trusted*/)
      : context_(std::move(context)), terms_(std::move(sorted_terms)) {}

  ContextPtr context_;
  std::vector<Term> terms_;
};

/// Throws ContextError unless the arities agree.
void require_same_context(const Polynomial& a, const Polynomial& b);
void require_same_arity(const ContextPtr& a, const ContextPtr& b);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// d/dx_var; throws std::out_of_range when var >= arity.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Exact value at a rational point; throws std::invalid_argument on a
/// length mismatch.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);
/// Floating point value, for the numerical oracles.
double evaluate(const Polynomial& p, std::span<const double> point);

/// Replaces variable `var` by the polynomial `value` (same context).
Polynomial substitute(const Polynomial& p, std::size_t var, const Polynomial& value);

struct Homogeneity {
  enum class Kind { zero, homogeneous, inhomogeneous };
  Kind kind;
  unsigned degree = 0;  // meaningful for Kind::homogeneous only
};

Homogeneity is_homogeneous(const Polynomial& p);

/// Canonical text: grevlex-descending terms, explicit signs, rational
/// coefficients, "^" powers, e.g. "x^2 - 3/2*x*y + 1". Parses back to p.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const VariableContext& context);

}  // namespace milnorkit
