#include "milnorkit/harmonic.hpp"

#include <stdexcept>

namespace milnorkit {

namespace {

Polynomial dot(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  Polynomial out(a.front().context());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    out += a[i] * b[i];
  }
  return out;
}

}  // namespace

Polynomial laplacian(const Polynomial& f) {
  Polynomial out(f.context());
  for (std::size_t i = 0; i < f.arity(); ++i) out += partial_derivative(partial_derivative(f, i), i);
  return out;
}

OneFormHarmonicity one_form_harmonic(const DiffForm& w) {
  if (w.degree() != 1) throw std::invalid_argument("harmonicity is defined here for 1-forms only");
  DiffForm dw = exterior_derivative(w);
  Polynomial div(w.context());
  for (std::size_t i = 0; i < w.arity(); ++i) div += partial_derivative(w.coefficient(1u << i), i);
  Status s = holds_if(dw.is_zero() && div.is_zero());
  return {s, std::move(dw), std::move(div)};
}

GramResult gram(const PolyMap& f) {
  PolyMatrix grads = f.jacobian();
  const std::size_t p = f.size();
  GramResult r;
  r.gram.assign(p, std::vector<Polynomial>(p, Polynomial(f.context())));
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      r.gram[a][b] = dot(grads[a], grads[b]);
      if (b != a) r.gram[b][a] = r.gram[a][b];
    }
  }
  bool hwc = true;
  for (std::size_t a = 0; a < p && hwc; ++a) {
    if (!(r.gram[a][a] == r.gram[0][0])) hwc = false;
    for (std::size_t b = a + 1; b < p && hwc; ++b) {
      if (!r.gram[a][b].is_zero()) hwc = false;
    }
  }
  r.hwc = hwc;
  if (hwc) r.lambda_sq = r.gram[0][0];
  return r;
}

IndependenceResult functional_independence(const PolyMap& f) {
  IndependenceResult r{Status::fails, {}, std::nullopt};
  const std::size_t p = f.size(), n = f.arity();
  if (p > n) return r;
  PolyMatrix jac = f.jacobian();
  std::vector<std::size_t> pick(p);
  for (std::size_t i = 0; i < p; ++i) pick[i] = i;
  while (true) {
    PolyMatrix sub(p);
    for (std::size_t row = 0; row < p; ++row) {
      for (std::size_t c : pick) sub[row].push_back(jac[row][c]);
    }
    Polynomial m = determinant(sub);
    if (!m.is_zero()) {
      r.status = Status::holds;
      r.columns = pick;
      r.minor = std::move(m);
      return r;
    }
    std::size_t i = p;
    while (i > 0 && pick[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return r;
}

HarmonicVerdict is_harmonic_first_integral_map(const PolyMap& f) {
  HarmonicVerdict v{Status::fails, Status::holds, {}, Status::fails, gram(f), functional_independence(f),
                    std::nullopt};
  for (const auto& c : f.components()) {
    v.laplacians.push_back(laplacian(c));
    if (!v.laplacians.back().is_zero()) v.laplace = Status::fails;
  }
  v.conformal = holds_if(v.gram.hwc);
  if (f.size() >= 2 && v.gram.hwc && v.laplace == Status::fails) {
    v.alarm = "map is horizontally weakly conformal but not harmonic";
  }
  bool ok = v.laplace == Status::holds && v.conformal == Status::holds &&
            v.independence.status == Status::holds;
  v.status = holds_if(ok);
  return v;
}

HomothetyResult horizontally_homothetic_sufficient(const PolyMap& f) {
  HomothetyResult r{Status::inapplicable, {}};
  GramResult g = gram(f);
  if (!g.hwc) return r;
  std::vector<Polynomial> grad_l = gradient(*g.lambda_sq);
  bool vertical = true;
  for (const auto& c : f.components()) {
    r.residuals.push_back(dot(grad_l, gradient(c)));
    if (!r.residuals.back().is_zero()) vertical = false;
  }
  r.status = vertical ? Status::holds : Status::unknown;
  return r;
}

SingularIdeal singular_ideal(const PolyMap& f, bool conformal) {
  SingularIdeal s;
  PolyMatrix jac = f.jacobian();
  if (f.size() <= f.arity()) {
    for (auto& m : maximal_minors(jac)) {
      if (!m.is_zero()) s.minors.push_back(std::move(m));
    }
  }
  if (conformal) {
    std::vector<Polynomial> partials;
    for (const auto& row : jac) {
      for (const auto& d : row) {
        if (!d.is_zero()) partials.push_back(d);
      }
    }
    s.partials = std::move(partials);
  }
  return s;
}

}  // namespace milnorkit
