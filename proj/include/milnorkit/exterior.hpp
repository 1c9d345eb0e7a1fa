#pragma once

// Exterior calculus with polynomial coefficients on Euclidean space.
//
// Forms and multivectors share one representation: a fixed degree k and a
// map from strictly increasing index tuples (stored as bit masks) to
// nonzero polynomial coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnorkit/polymap.hpp"
#include "milnorkit/status.hpp"

namespace milnorkit {

/// Orders masks as increasing index tuples, lexicographically.
struct TupleLess {
  bool operator()(std::uint32_t a, std::uint32_t b) const;
};

/// Sign of the permutation sorting the concatenation of the tuples `a`
/// and `b` (which must be disjoint): +1 or -1.
int shuffle_sign(std::uint32_t a, std::uint32_t b);

std::vector<std::size_t> mask_indices(std::uint32_t mask);

enum class ExteriorKind { form, multivector };

template <ExteriorKind Kind>
class Graded {
 public:
  using Coefficients = std::map<std::uint32_t, Polynomial, TupleLess>;

  Graded(ContextPtr context, unsigned degree) : context_(std::move(context)), degree_(degree) {}

  /// c * e_{i1} ^ ... ^ e_{ik} for strictly increasing or arbitrary distinct
  /// indices (sign adjusted); repeated indices give zero.
  static Graded basis(const ContextPtr& context, const std::vector<std::size_t>& indices,
                      const Polynomial& c);

  const ContextPtr& context() const { return context_; }
  std::size_t arity() const { return context_->arity(); }
  unsigned degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Polynomial coefficient(std::uint32_t mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Polynomial(context_) : it->second;
  }

  /// Adds c to the coefficient of `mask`; zero results are erased.
  void accumulate(std::uint32_t mask, const Polynomial& c);

  Graded& operator+=(const Graded& other);
  Graded& operator-=(const Graded& other);
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  Graded operator-() const;
  /// Multiplication by a 0-form.
  Graded scaled(const Polynomial& f) const;

  bool operator==(const Graded& other) const;

 private:
  void check_compatible(const Graded& other) const;

  ContextPtr context_;
  unsigned degree_;
  Coefficients coeffs_;
};

using DiffForm = Graded<ExteriorKind::form>;
using Multivector = Graded<ExteriorKind::multivector>;

/// X = sum_i X_i d/dx_i.
class VectorField {
 public:
  VectorField(ContextPtr context, std::vector<Polynomial> components);

  const ContextPtr& context() const { return context_; }
  std::size_t arity() const { return context_->arity(); }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<Polynomial>& components() const { return components_; }

  /// X(f) = sum_i X_i df/dx_i.
  Polynomial apply(const Polynomial& f) const;

  /// The field as a 1-vector.
  Multivector as_multivector() const;

  bool operator==(const VectorField& other) const = default;

 private:
  ContextPtr context_;
  std::vector<Polynomial> components_;
};

/// 1-form with the given coefficients on dx_1, ..., dx_n.
DiffForm one_form(const ContextPtr& context, const std::vector<Polynomial>& coefficients);
/// Coefficients of a 1-form, one per variable.
std::vector<Polynomial> one_form_coefficients(const DiffForm& w);
/// df.
DiffForm differential(const Polynomial& f);
/// f as a 0-form.
DiffForm zero_form(const Polynomial& f);

template <ExteriorKind Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b);

/// Wedge of a list (empty list -> the constant 1 of degree 0).
template <ExteriorKind Kind>
Graded<Kind> wedge_all(const ContextPtr& context, const std::vector<Graded<Kind>>& items);

DiffForm exterior_derivative(const DiffForm& a);

/// Contraction in the first slot: (i_X a)(Y_2, ..., Y_k) = a(X, Y_2, ..., Y_k).
/// Requires degree >= 1; a 1-form yields the 0-form sum_i a_i X_i.
DiffForm interior_product(const DiffForm& a, const VectorField& x);

/// [X, Y]_i = X(Y_i) - Y(X_i).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

std::string to_string(const DiffForm& w);
std::string to_string(const Multivector& w);
std::string to_string(const VectorField& x);

// ---------------------------------------------------------------------------
// Checks

struct FormResidual {
  Status status;
  DiffForm residual;
};

/// For each j, the residual d(w_j) ^ w_1 ^ ... (w_j omitted) ... ^ w_q.
/// For a single form this is dw ^ w.
std::vector<FormResidual> frobenius_check(const std::vector<DiffForm>& forms);

struct InvolutivityResult {
  Status status;
  /// First failing pair (i, j) and its residual [X_i, X_j] ^ X_1 ^ ... ^ X_k.
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<Multivector> residual;
  static constexpr const char* criterion = "[X_i,X_j] ^ X_1 ^ ... ^ X_k == 0 for all i < j";
};

InvolutivityResult involutivity_check(const std::vector<VectorField>& fields);

struct FirstIntegralResult {
  Status status;
  /// residuals[k][l] = df_k(X^l).
  std::vector<std::vector<Polynomial>> residuals;
};

FirstIntegralResult first_integral_check(const PolyMap& f, const std::vector<VectorField>& fields);

/// For each component, the residual df_k ^ w_1 ^ ... ^ w_q (f_k is constant
/// on the leaves of the system iff it vanishes).
std::vector<FormResidual> form_first_integral_check(const PolyMap& f,
                                                    const std::vector<DiffForm>& forms);

}  // namespace milnorkit
