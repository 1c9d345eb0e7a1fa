#pragma once

#include <functional>
#include <vector>

#include "milnorkit/polynomial.hpp"

namespace milnorkit {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// An ordered tuple (f_1, ..., f_p) over one variable context.
class PolyMap {
 public:
  PolyMap(ContextPtr context, std::vector<Polynomial> components);

  const ContextPtr& context() const { return context_; }
  std::size_t arity() const { return context_->arity(); }
  /// Number of components p.
  std::size_t size() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<Polynomial>& components() const { return components_; }

  /// (f_1, ..., f_j), 1 <= j <= p.
  PolyMap truncation(std::size_t j) const;

  /// p x arity matrix of partial derivatives.
  PolyMatrix jacobian() const;

 private:
  ContextPtr context_;
  std::vector<Polynomial> components_;
};

/// Optional hook applied to every intermediate product (e.g. a normal form
/// modulo an ideal), letting determinants be taken inside a quotient ring.
using PolyReducer = std::function<Polynomial(const Polynomial&)>;

/// Determinant of a square polynomial matrix by expansion over column
/// subsets (O(n 2^n) products).
Polynomial determinant(const PolyMatrix& m, const PolyReducer& reduce = {});

/// All k x k minors using the first k rows of an r x c matrix (k = r),
/// in lexicographic order of the chosen column sets.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// Hessian matrix of second partials.
PolyMatrix hessian(const Polynomial& f);

/// Gradient as a list of partial derivatives.
std::vector<Polynomial> gradient(const Polynomial& f);

}  // namespace milnorkit
