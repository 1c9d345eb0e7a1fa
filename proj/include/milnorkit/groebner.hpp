#pragma once

// Groebner bases under graded reverse lexicographic order, and what they
// buy: normal forms, Krull dimension, finite quotient algebras, Milnor
// numbers.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnorkit/polynomial.hpp"

namespace milnorkit {

class GroebnerBasis {
 public:
  /// The reduced basis: monic, self-reduced, sorted by descending leading
  /// monomial. Empty for the zero ideal, {1} for the unit ideal.
  GroebnerBasis(ContextPtr context, std::vector<Polynomial> reduced);

  const ContextPtr& context() const { return context_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool reduced() const { return true; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant(); }
  bool contains(const Polynomial& p) const;

  bool operator==(const GroebnerBasis& other) const { return gens_ == other.gens_; }

 private:
  ContextPtr context_;
  std::vector<Polynomial> gens_;
};

/// Statistics of the last run, for diagnostics.
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t reductions_to_zero = 0;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy. Zero generators are ignored; an all-zero list
/// yields the zero ideal. Throws std::invalid_argument on an empty list.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, BuchbergerStats* stats = nullptr);

/// Full reduction: no term of the result is divisible by a leading term.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Krull dimension of R/I; -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& gb);

/// A maximal set of variables independent modulo the leading-term ideal.
std::vector<std::size_t> independent_variables(const GroebnerBasis& gb);

class QuotientAlgebra {
 public:
  /// Throws DomainError unless the ideal is zero-dimensional.
  explicit QuotientAlgebra(GroebnerBasis gb);

  const GroebnerBasis& ideal() const { return gb_; }
  /// Standard monomials, by ascending degree, then descending grevlex.
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinates of NF(p) on the basis.
  std::vector<Rational> coordinates(const Polynomial& p) const;
  Polynomial element(const std::vector<Rational>& coords) const;
  /// b_i * b_j, reduced.
  std::vector<Rational> multiply(std::size_t i, std::size_t j) const;

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrevlexGreater> index_;
};

/// Shortcut for QuotientAlgebra(gb) that returns nullopt instead of
/// throwing.
std::optional<QuotientAlgebra> try_quotient_algebra(const GroebnerBasis& gb);

/// True iff x_i^D lies in the ideal for every variable, D = dim R/I: the
/// ideal is then primary to the origin and the global quotient is the local
/// algebra there. Requires a zero-dimensional, proper ideal.
bool supported_at_origin(const QuotientAlgebra& q);

struct MilnorNumber {
  enum class Kind { finite, infinite, unsupported };
  Kind kind;
  std::size_t value = 0;
  /// Dimension of the Jacobian ideal (over C).
  int jacobian_dimension = 0;
  std::string note;
};

/// dim R/(df/dx_1, ..., df/dx_n). A Jacobian ideal that is zero-dimensional
/// but also vanishes away from the origin is reported unsupported (the
/// local algebra would need local standard bases).
MilnorNumber milnor_number(const Polynomial& f);

std::vector<Polynomial> jacobian_ideal(const Polynomial& f);

/// Sound real-locus refinement: a polynomial whose terms are all even
/// powers with coefficients of one sign vanishes at a real point only where
/// each term's square-free support does, so those supports may be added
/// without changing the real zero set. Repeated to a fixpoint, with the
/// generators, the basis elements and the sum of squares of the generators
/// as candidates.
struct RealRefinement {
  GroebnerBasis basis;
  int dimension;
  /// Square-free monomials added along the way.
  std::vector<Monomial> added;
  /// Every basis element is linear: the real zero set is then a linear
  /// subspace and `dimension` is its exact real dimension.
  bool linear;
  /// The refined ideal contains every variable: the only real zero is 0.
  bool origin_only;
};

RealRefinement real_refinement(const std::vector<Polynomial>& generators);

}  // namespace milnorkit
