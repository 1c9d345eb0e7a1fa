#include "milnorkit/local_degree.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "milnorkit/error.hpp"

namespace milnorkit {

Inertia inertia(RationalMatrix m) {
  const std::size_t n = m.size();
  Inertia out;
  std::size_t k = 0;
  while (k < n) {
    // find a nonzero diagonal pivot in the trailing block
    std::size_t piv = k;
    while (piv < n && m[piv][piv] == 0) ++piv;
    if (piv == n) {
      // all diagonal entries vanish: make one nonzero via e_i <- e_i + e_j
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (m[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      for (std::size_t c = 0; c < n; ++c) m[bi][c] += m[bj][c];
      for (std::size_t r = 0; r < n; ++r) m[r][bi] += m[r][bj];
      piv = bi;
    }
    std::swap(m[piv], m[k]);
    for (auto& row : m) std::swap(row[piv], row[k]);
    const Rational p = m[k][k];
    (sign(p) > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / p;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      // keep symmetry: column update mirrors the row update
      for (std::size_t j = k; j < n; ++j) m[j][i] = m[i][j];
    }
    ++k;
  }
  return out;
}

LocalAlgebra local_algebra(const Polynomial& f) {
  GroebnerBasis gb = buchberger(jacobian_ideal(f));
  int d = ideal_dimension(gb);
  if (d != 0) throw DomainError("Jacobian ideal is not zero-dimensional");
  QuotientAlgebra q(gb);
  if (!supported_at_origin(q)) throw DomainError("unsupported: requires local standard bases");
  PolyReducer reduce = [&gb](const Polynomial& p) { return normal_form(p, gb); };
  Polynomial j = determinant(hessian(f), reduce);
  LocalAlgebra a{q, q.coordinates(j), {}};
  a.table.resize(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t k = i; k < q.dim(); ++k) a.table[i].push_back(q.multiply(i, k));
  }
  return a;
}

Rational apply_functional(const std::vector<Rational>& phi, const std::vector<Rational>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < phi.size() && i < v.size(); ++i) {
    if (phi[i] != 0 && v[i] != 0) s += phi[i] * v[i];
  }
  return s;
}

RationalMatrix bilinear_form(const LocalAlgebra& a, const std::vector<Rational>& phi) {
  const std::size_t n = a.quotient.dim();
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      m[i][k] = apply_functional(phi, a.table[i][k - i]);
      m[k][i] = m[i][k];
    }
  }
  return m;
}

std::vector<Rational> default_functional(const LocalAlgebra& a) {
  const auto& basis = a.quotient.basis();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (a.hessian[i] == 0) continue;
    if (!best || basis[i].degree() > basis[*best].degree() ||
        (basis[i].degree() == basis[*best].degree() && grevlex(basis[i], basis[*best]) > 0)) {
      best = i;
    }
  }
  std::vector<Rational> phi(basis.size());
  if (best) phi[*best] = sign(a.hessian[*best]) > 0 ? 1 : -1;
  return phi;
}

std::vector<Rational> random_functional(const LocalAlgebra& a, std::uint64_t seed) {
  const std::size_t n = a.quotient.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1), num(-6, 6), den(1, 4);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> phi(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) {
        phi[i] = Rational(num(rng), den(rng));
        phi[i].canonicalize();
      }
    }
    Rational v = apply_functional(phi, a.hessian);
    if (v == 0) continue;
    if (sign(v) < 0) {
      for (auto& x : phi) x = -x;
    }
    return phi;
  }
  return default_functional(a);
}

namespace {

ElCertificate certify(const LocalAlgebra& a, std::vector<Rational> phi) {
  ElCertificate c{a.quotient.basis(), a.hessian, std::move(phi), {}, {}};
  c.form = bilinear_form(a, c.functional);
  c.inertia = inertia(c.form);
  return c;
}

}  // namespace

ElDegree el_degree(const Polynomial& f, std::uint64_t seed) {
  ElDegree r{ElDegree::Kind::defined, 0, milnor_number(f), std::nullopt, std::nullopt, {}, std::nullopt};
  switch (r.milnor.kind) {
    case MilnorNumber::Kind::infinite:
      r.kind = ElDegree::Kind::infinite;
      r.note = "degree undefined by EL (infinite Milnor number)";
      return r;
    case MilnorNumber::Kind::unsupported:
      r.kind = ElDegree::Kind::unsupported;
      r.note = r.milnor.note;
      return r;
    case MilnorNumber::Kind::finite:
      break;
  }
  if (r.milnor.value == 0) {
    r.kind = ElDegree::Kind::regular;
    r.note = "gradient does not vanish at the origin; degree 0";
    return r;
  }
  LocalAlgebra a = local_algebra(f);
  r.certificate = certify(a, default_functional(a));
  r.cross_check = certify(a, random_functional(a, seed));
  r.degree = r.certificate->inertia.signature();
  if (apply_functional(r.certificate->functional, a.hessian) <= 0) {
    r.alarm = "Hessian class vanishes in the local algebra";
  } else if (r.certificate->inertia.zero != 0 || r.cross_check->inertia.zero != 0) {
    r.alarm = "degenerate Eisenbud-Levine form";
  } else if (r.cross_check->inertia.signature() != r.degree) {
    r.alarm = "signature depends on the functional: " + std::to_string(r.degree) + " vs " +
              std::to_string(r.cross_check->inertia.signature());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Numerical oracles

namespace {

struct NumericMap {
  std::vector<Polynomial> g;
  std::vector<std::vector<Polynomial>> jac;

  explicit NumericMap(const PolyMap& m) : g(m.components()), jac(m.jacobian()) {}

  Eigen::VectorXd value(const Eigen::VectorXd& x) const {
    std::vector<double> pt(x.data(), x.data() + x.size());
    Eigen::VectorXd out(static_cast<Eigen::Index>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) out(static_cast<Eigen::Index>(i)) = evaluate(g[i], pt);
    return out;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    std::vector<double> pt(x.data(), x.data() + x.size());
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        out(i, j) = evaluate(jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], pt);
      }
    }
    return out;
  }
};

double radical_inverse(std::uint64_t i, unsigned base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Halton point in [-1, 1]^n.
Eigen::VectorXd halton(std::uint64_t index, std::size_t n) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) x(static_cast<Eigen::Index>(k)) = 2.0 * radical_inverse(index, kPrimes[k]) - 1.0;
  return x;
}

double min_norm_on_sphere(const NumericMap& m, std::size_t n, double radius, std::size_t samples) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 1; i <= samples; ++i) {
    Eigen::VectorXd x = halton(i, n);
    if (x.norm() < 1e-3) continue;
    x *= radius / x.norm();
    best = std::min(best, m.value(x).norm());
  }
  return best;
}

}  // namespace

OracleResult winding_degree_2d(const PolyMap& g, double radius) {
  OracleResult r;
  if (g.size() != 2 || g.arity() != 2) throw std::invalid_argument("winding oracle needs a map R^2 -> R^2");
  NumericMap m(g);
  const double two_pi = 2 * std::numbers::pi;
  for (int attempt = 0; attempt < 4; ++attempt, radius *= 1.0731) {
    r.radius = radius;
    for (std::size_t n = 64; n <= (std::size_t{1} << 18); n *= 2) {
      double total = 0, max_step = 0, min_norm = std::numeric_limits<double>::infinity(), max_norm = 0;
      Eigen::VectorXd x(2);
      auto angle_at = [&](std::size_t k) {
        double t = two_pi * static_cast<double>(k) / static_cast<double>(n);
        x << radius * std::cos(t), radius * std::sin(t);
        Eigen::VectorXd v = m.value(x);
        min_norm = std::min(min_norm, v.norm());
        max_norm = std::max(max_norm, v.norm());
        return std::atan2(v(1), v(0));
      };
      double prev = angle_at(0);
      for (std::size_t k = 1; k <= n; ++k) {
        double cur = angle_at(k % n);
        double d = std::remainder(cur - prev, two_pi);
        max_step = std::max(max_step, std::abs(d));
        total += d;
        prev = cur;
      }
      if (!(min_norm > 1e-9 * std::max(max_norm, 1e-300))) break;  // zero near the circle
      r.samples = n;
      if (max_step < std::numbers::pi / 2) {
        double w = total / two_pi;
        if (std::abs(w - std::round(w)) > 1e-6) {
          r.note = "winding total not close to an integer";
          return r;
        }
        r.degree = static_cast<int>(std::lround(w));
        r.note = "argument tracking";
        return r;
      }
    }
  }
  r.note = "oracle inconclusive";
  return r;
}

OracleResult preimage_degree(const PolyMap& g, double target_magnitude, std::size_t seeds,
                             std::uint64_t rng_seed, double radius) {
  OracleResult r;
  const std::size_t n = g.arity();
  if (g.size() != n) throw std::invalid_argument("preimage oracle needs a square map");
  NumericMap m(g);
  r.radius = radius;

  double floor_norm = min_norm_on_sphere(m, n, radius, 2048);
  double mag = std::min(target_magnitude, floor_norm / 4);
  if (!(mag > 0)) {
    r.note = "map vanishes on the sphere; no evidence";
    return r;
  }
  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = normal(rng);
  v *= mag / v.norm();
  r.target = mag;

  const double tol = 1e-11 * mag;
  std::vector<Eigen::VectorXd> found;
  int total = 0;
  std::size_t converged = 0;
  for (std::uint64_t s = 1; s <= seeds; ++s) {
    Eigen::VectorXd x = halton(s, n) * radius;
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
      Eigen::VectorXd res = m.value(x) - v;
      double rn = res.norm();
      if (rn < tol) {
        ok = true;
        break;
      }
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(m.jacobian(x));
      Eigen::VectorXd d = lu.solve(res);
      if (!d.allFinite()) break;
      double step = 1.0;
      bool moved = false;
      while (step > 1e-8) {
        Eigen::VectorXd y = x - step * d;
        if ((m.value(y) - v).norm() < rn) {
          x = y;
          moved = true;
          break;
        }
        step /= 2;
      }
      if (!moved || x.norm() > 10 * radius) break;
    }
    if (!ok) continue;
    ++converged;
    if (x.norm() >= radius) continue;
    bool dup = std::any_of(found.begin(), found.end(),
                           [&](const Eigen::VectorXd& y) { return (y - x).norm() < 1e-7 * radius; });
    if (dup) continue;
    double det = m.jacobian(x).determinant();
    if (det == 0) continue;
    found.push_back(x);
    total += det > 0 ? 1 : -1;
  }
  r.samples = seeds;
  r.solutions = found.size();
  if (converged == 0) {
    r.note = "no evidence (Newton diverged from every seed)";
    return r;
  }
  r.degree = total;
  r.note = "lower-bound evidence: " + std::to_string(found.size()) + " solution(s) found";
  return r;
}

DegreeAnalysis analyze_degree(const Polynomial& f, std::uint64_t seed) {
  DegreeAnalysis a{el_degree(f, seed), std::nullopt, std::nullopt, "n/a", "n/a", {}, {}};
  if (a.el.kind == ElDegree::Kind::infinite) return a;
  std::optional<int> exact;
  if (a.el.kind == ElDegree::Kind::defined || a.el.kind == ElDegree::Kind::regular) exact = a.el.degree;
  if (a.el.alarm) a.alarms.push_back(*a.el.alarm);

  PolyMap grad(f.context(), gradient(f));
  const bool homogeneous = is_homogeneous(f).kind == Homogeneity::Kind::homogeneous;
  double radius = homogeneous ? 1.0 : 0.125;
  double target = homogeneous ? 1.0 : 1.0 / 64;
  const std::size_t seeds = 96 * f.arity();

  auto run = [&]() {
    if (f.arity() == 2) a.winding = winding_degree_2d(grad, radius);
    a.preimage = preimage_degree(grad, target, seeds, seed, radius);
  };
  auto agree = [&](const std::optional<OracleResult>& o) {
    return !o || !exact || (o->degree && *o->degree == *exact);
  };
  run();
  if (!homogeneous && (!agree(a.winding) || !agree(a.preimage))) {
    radius /= 2;
    target /= 2;
    run();
  }
  auto label = [&](const std::optional<OracleResult>& o) -> std::string {
    if (!o || !exact) return "n/a";
    if (!o->degree) return "inconclusive";
    return *o->degree == *exact ? "agree" : "disagree";
  };
  a.winding_agreement = label(a.winding);
  a.preimage_agreement = label(a.preimage);
  if (a.winding_agreement == "disagree") {
    a.alarms.push_back("winding oracle gives " + std::to_string(*a.winding->degree) + ", EL gives " +
                       std::to_string(*exact));
  }
  if (a.preimage_agreement == "disagree") {
    a.evidence.push_back("preimage oracle gives " + std::to_string(*a.preimage->degree) + ", EL gives " +
                         std::to_string(*exact));
  }
  return a;
}

}  // namespace milnorkit
