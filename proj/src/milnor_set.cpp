#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "milnorkit/classify.hpp"

namespace milnorkit {

namespace {

Eigen::MatrixXd numeric_jacobian(const PolyMatrix& jac, const std::vector<double>& x) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(jac.size()), static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < jac.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate(jac[i][j], x);
    }
  }
  return m;
}

// sigma_min / sigma_max with rows scaled to unit length; 0 for a zero row.
double conditioning(Eigen::MatrixXd m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double nr = m.row(i).norm();
    if (nr == 0) return 0;
    m.row(i) /= nr;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) / s(0);
}

}  // namespace

MilnorSetResult milnor_set_check(const PolyMap& f, bool harmonic, std::uint64_t seed) {
  MilnorSetResult r{Status::unknown, {}, false, 0, "", std::nullopt};
  const std::size_t n = f.arity(), p = f.size();
  PolyMatrix jac = f.jacobian();
  PolyMatrix aug = jac;
  std::vector<Polynomial> rho_grad;
  for (std::size_t i = 0; i < n; ++i) rho_grad.push_back(Polynomial::variable(f.context(), i) * Rational(2));
  aug.push_back(rho_grad);
  if (p + 1 > n) {
    r.degenerate = true;
    r.note = "p + 1 > n: every point is rho-nonregular";
    return r;
  }
  for (auto& m : maximal_minors(aug)) {
    if (!m.is_zero()) r.generators.push_back(std::move(m));
  }
  if (r.generators.empty()) {
    r.degenerate = true;
    r.note = "all minors vanish identically: the Milnor set is everything (rho is functionally dependent on F)";
    return r;
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::size_t suspects = 0, singular = 0;
  for (double radius : {0.1, 0.05}) {
    for (int trial = 0; trial < 32; ++trial) {
      Eigen::VectorXd y(static_cast<Eigen::Index>(n));
      for (auto& v : y) v = normal(rng);
      y *= radius / y.norm();
      bool converged = false;
      for (int it = 0; it < 60; ++it) {
        std::vector<double> pt(y.data(), y.data() + n);
        Eigen::VectorXd val(static_cast<Eigen::Index>(p));
        for (std::size_t k = 0; k < p; ++k) val(static_cast<Eigen::Index>(k)) = evaluate(f[k], pt);
        if (val.norm() < 1e-14) {
          converged = true;
          break;
        }
        Eigen::VectorXd step = numeric_jacobian(jac, pt).completeOrthogonalDecomposition().solve(val);
        if (!step.allFinite()) break;
        y -= step;
      }
      if (!converged || y.norm() < radius / 4 || y.norm() > 4 * radius) continue;
      ++r.samples;
      std::vector<double> pt(y.data(), y.data() + n);
      if (conditioning(numeric_jacobian(jac, pt)) < 1e-6) {
        ++singular;
        continue;
      }
      if (conditioning(numeric_jacobian(aug, pt)) < 1e-8) ++suspects;
    }
  }
  std::string sampled = std::to_string(r.samples) + " point(s) of V_F \\ {0} sampled, " + std::to_string(singular) +
                        " singular, " + std::to_string(suspects) + " non-transverse to the sphere";
  if (harmonic && p >= 2) {
    r.status = Status::holds;
    r.note = "holds by the fibration theorem for harmonic first integral maps; " + sampled;
    if (suspects > 0) r.alarm = "Milnor set meets V_F \\ {0} at smooth points near the origin: " + sampled;
  } else if (suspects == 0) {
    r.status = Status::holds;
    r.note = "sampling evidence only: " + sampled;
  } else {
    r.note = "sampling inconclusive: " + sampled;
  }
  return r;
}

}  // namespace milnorkit
