#include "milnorkit/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "milnorkit/error.hpp"

namespace milnorkit {

bool TupleLess::operator()(std::uint32_t a, std::uint32_t b) const {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

int shuffle_sign(std::uint32_t a, std::uint32_t b) {
  // count pairs (i in a, j in b) with i > j
  int inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

// ---------------------------------------------------------------------------
// Graded

template <ExteriorKind Kind>
Graded<Kind> Graded<Kind>::basis(const ContextPtr& context, const std::vector<std::size_t>& indices,
                                 const Polynomial& c) {
  Graded out(context, static_cast<unsigned>(indices.size()));
  std::uint32_t mask = 0;
  int sign = 1;
  for (std::size_t i : indices) {
    if (i >= context->arity()) throw std::out_of_range("basis index out of range");
    std::uint32_t bit = 1u << i;
    if (mask & bit) return out;
    sign *= shuffle_sign(mask, bit);
    mask |= bit;
  }
  out.accumulate(mask, sign > 0 ? c : -c);
  return out;
}

template <ExteriorKind Kind>
void Graded<Kind>::accumulate(std::uint32_t mask, const Polynomial& c) {
  if (c.is_zero()) return;
  require_same_arity(context_, c.context());
  if (static_cast<unsigned>(std::popcount(mask)) != degree_) {
    throw std::invalid_argument("coefficient index does not match the degree");
  }
  auto it = coeffs_.find(mask);
  if (it == coeffs_.end()) {
    coeffs_.emplace(mask, c.with_context(context_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

template <ExteriorKind Kind>
void Graded<Kind>::check_compatible(const Graded& other) const {
  require_same_arity(context_, other.context_);
  if (degree_ != other.degree_) throw std::invalid_argument("adding elements of different degree");
}

template <ExteriorKind Kind>
Graded<Kind>& Graded<Kind>::operator+=(const Graded& other) {
  check_compatible(other);
  for (const auto& [mask, c] : other.coeffs_) accumulate(mask, c);
  return *this;
}

template <ExteriorKind Kind>
Graded<Kind>& Graded<Kind>::operator-=(const Graded& other) {
  check_compatible(other);
  for (const auto& [mask, c] : other.coeffs_) accumulate(mask, -c);
  return *this;
}

template <ExteriorKind Kind>
Graded<Kind> Graded<Kind>::operator-() const {
  Graded out = *this;
  for (auto& [mask, c] : out.coeffs_) c = -c;
  return out;
}

template <ExteriorKind Kind>
Graded<Kind> Graded<Kind>::scaled(const Polynomial& f) const {
  Graded out(context_, degree_);
  for (const auto& [mask, c] : coeffs_) out.accumulate(mask, c * f);
  return out;
}

template <ExteriorKind Kind>
bool Graded<Kind>::operator==(const Graded& other) const {
  if (arity() != other.arity() || degree_ != other.degree_ || coeffs_.size() != other.coeffs_.size()) {
    return false;
  }
  return std::equal(coeffs_.begin(), coeffs_.end(), other.coeffs_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

template <ExteriorKind Kind>
Graded<Kind> wedge(const Graded<Kind>& a, const Graded<Kind>& b) {
  require_same_arity(a.context(), b.context());
  Graded<Kind> out(a.context(), a.degree() + b.degree());
  for (const auto& [ma, pa] : a.coefficients()) {
    for (const auto& [mb, pb] : b.coefficients()) {
      if (ma & mb) continue;
      Polynomial c = pa * pb;
      out.accumulate(ma | mb, shuffle_sign(ma, mb) > 0 ? c : -c);
    }
  }
  return out;
}

template <ExteriorKind Kind>
Graded<Kind> wedge_all(const ContextPtr& context, const std::vector<Graded<Kind>>& items) {
  Graded<Kind> acc(context, 0);
  acc.accumulate(0, Polynomial(context, Rational(1)));
  for (const auto& item : items) acc = wedge(acc, item);
  return acc;
}

template class Graded<ExteriorKind::form>;
template class Graded<ExteriorKind::multivector>;
template DiffForm wedge(const DiffForm&, const DiffForm&);
template Multivector wedge(const Multivector&, const Multivector&);
template DiffForm wedge_all(const ContextPtr&, const std::vector<DiffForm>&);
template Multivector wedge_all(const ContextPtr&, const std::vector<Multivector>&);

// ---------------------------------------------------------------------------
// Vector fields and 1-forms

VectorField::VectorField(ContextPtr context, std::vector<Polynomial> components)
    : context_(std::move(context)), components_(std::move(components)) {
  if (components_.size() != context_->arity()) {
    throw InputError("a vector field needs one component per variable (" +
                     std::to_string(context_->arity()) + "), got " + std::to_string(components_.size()));
  }
  for (auto& c : components_) c = c.with_context(context_);
}

Polynomial VectorField::apply(const Polynomial& f) const {
  require_same_arity(context_, f.context());
  Polynomial out(context_);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    out += components_[i] * partial_derivative(f, i);
  }
  return out;
}

Multivector VectorField::as_multivector() const {
  Multivector out(context_, 1);
  for (std::size_t i = 0; i < components_.size(); ++i) out.accumulate(1u << i, components_[i]);
  return out;
}

DiffForm one_form(const ContextPtr& context, const std::vector<Polynomial>& coefficients) {
  if (coefficients.size() != context->arity()) {
    throw InputError("a 1-form needs one coefficient per variable (" + std::to_string(context->arity()) +
                     "), got " + std::to_string(coefficients.size()));
  }
  DiffForm out(context, 1);
  for (std::size_t i = 0; i < coefficients.size(); ++i) out.accumulate(1u << i, coefficients[i]);
  return out;
}

std::vector<Polynomial> one_form_coefficients(const DiffForm& w) {
  if (w.degree() != 1) throw std::invalid_argument("not a 1-form");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < w.arity(); ++i) out.push_back(w.coefficient(1u << i));
  return out;
}

DiffForm differential(const Polynomial& f) { return one_form(f.context(), gradient(f)); }

DiffForm zero_form(const Polynomial& f) {
  DiffForm out(f.context(), 0);
  out.accumulate(0, f);
  return out;
}

DiffForm exterior_derivative(const DiffForm& a) {
  DiffForm out(a.context(), a.degree() + 1);
  for (const auto& [mask, c] : a.coefficients()) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
      std::uint32_t bit = 1u << i;
      if (mask & bit) continue;
      Polynomial d = partial_derivative(c, i);
      if (d.is_zero()) continue;
      // dx_i ^ dx_mask: move dx_i past the indices below it
      out.accumulate(mask | bit, shuffle_sign(bit, mask) > 0 ? d : -d);
    }
  }
  return out;
}

DiffForm interior_product(const DiffForm& a, const VectorField& x) {
  require_same_arity(a.context(), x.context());
  if (a.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
  DiffForm out(a.context(), a.degree() - 1);
  for (const auto& [mask, c] : a.coefficients()) {
    int sign = 1;
    for (std::size_t i : mask_indices(mask)) {
      if (!x[i].is_zero()) {
        Polynomial term = c * x[i];
        out.accumulate(mask & ~(1u << i), sign > 0 ? term : -term);
      }
      sign = -sign;
    }
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_arity(x.context(), y.context());
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < x.arity(); ++i) out.push_back(x.apply(y[i]) - y.apply(x[i]));
  return VectorField(x.context(), std::move(out));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

template <ExteriorKind Kind>
std::string graded_to_string(const Graded<Kind>& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : w.coefficients()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    for (std::size_t i : mask_indices(mask)) {
      out += (mask_indices(mask).front() == i) ? "*" : "^";
      if constexpr (Kind == ExteriorKind::form) {
        out += "d" + w.context()->name(i);
      } else {
        out += "d/d" + w.context()->name(i);
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(const DiffForm& w) { return graded_to_string(w); }
std::string to_string(const Multivector& w) { return graded_to_string(w); }
std::string to_string(const VectorField& x) { return graded_to_string(x.as_multivector()); }

// ---------------------------------------------------------------------------
// Checks

std::vector<FormResidual> frobenius_check(const std::vector<DiffForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("frobenius_check needs at least one form");
  const ContextPtr& ctx = forms.front().context();
  std::vector<FormResidual> out;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    if (forms[j].degree() != 1) throw std::invalid_argument("frobenius_check expects 1-forms");
    DiffForm residual = exterior_derivative(forms[j]);
    if (forms.size() == 1) {
      residual = wedge(residual, forms[j]);
    } else {
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i != j) residual = wedge(residual, forms[i]);
      }
    }
    require_same_arity(ctx, residual.context());
    out.push_back({holds_if(residual.is_zero()), std::move(residual)});
  }
  return out;
}

InvolutivityResult involutivity_check(const std::vector<VectorField>& fields) {
  InvolutivityResult result{Status::holds, 0, 0, std::nullopt};
  if (fields.size() < 2) return result;
  const ContextPtr& ctx = fields.front().context();
  std::vector<Multivector> vectors;
  for (const auto& f : fields) vectors.push_back(f.as_multivector());
  Multivector top = wedge_all(ctx, vectors);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      Multivector r = wedge(lie_bracket(fields[i], fields[j]).as_multivector(), top);
      if (!r.is_zero()) {
        result.status = Status::fails;
        result.first = i;
        result.second = j;
        result.residual = std::move(r);
        return result;
      }
    }
  }
  return result;
}

FirstIntegralResult first_integral_check(const PolyMap& f, const std::vector<VectorField>& fields) {
  FirstIntegralResult result{Status::holds, {}};
  for (const auto& component : f.components()) {
    std::vector<Polynomial> row;
    for (const auto& x : fields) {
      require_same_arity(f.context(), x.context());
      Polynomial r = x.apply(component);
      if (!r.is_zero()) result.status = Status::fails;
      row.push_back(std::move(r));
    }
    result.residuals.push_back(std::move(row));
  }
  return result;
}

std::vector<FormResidual> form_first_integral_check(const PolyMap& f,
                                                    const std::vector<DiffForm>& forms) {
  DiffForm system = wedge_all(f.context(), forms);
  std::vector<FormResidual> out;
  for (const auto& component : f.components()) {
    DiffForm r = wedge(differential(component), system);
    out.push_back({holds_if(r.is_zero()), std::move(r)});
  }
  return out;
}

}  // namespace milnorkit
