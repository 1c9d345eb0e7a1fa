#pragma once

// Local degree of a gradient at the origin: exact via the Eisenbud-Levine
// signature formula, with two floating point oracles as evidence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnorkit/groebner.hpp"
#include "milnorkit/polymap.hpp"

namespace milnorkit {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

/// Inertia of a symmetric rational matrix by congruence reduction.
Inertia inertia(RationalMatrix m);

/// The local algebra Q = R[x]/(grad f) with the class of det Hess f and the
/// multiplication table table[i][j] = b_i * b_j (i <= j), all on the
/// standard monomial basis.
struct LocalAlgebra {
  QuotientAlgebra quotient;
  std::vector<Rational> hessian;
  std::vector<std::vector<std::vector<Rational>>> table;
};

/// Throws DomainError unless the Jacobian ideal is zero-dimensional and
/// supported at the origin.
LocalAlgebra local_algebra(const Polynomial& f);

/// B(b_i, b_j) = phi(b_i * b_j).
RationalMatrix bilinear_form(const LocalAlgebra& a, const std::vector<Rational>& phi);

Rational apply_functional(const std::vector<Rational>& phi, const std::vector<Rational>& v);

/// Dual of the highest basis monomial in the support of the Hessian class,
/// signed so that phi(J) > 0.
std::vector<Rational> default_functional(const LocalAlgebra& a);

/// Random sparse functional with phi(J) > 0.
std::vector<Rational> random_functional(const LocalAlgebra& a, std::uint64_t seed);

struct ElCertificate {
  std::vector<Monomial> basis;
  std::vector<Rational> hessian_residue;
  std::vector<Rational> functional;
  RationalMatrix form;
  Inertia inertia;
};

struct ElDegree {
  enum class Kind { defined, regular, infinite, unsupported };
  Kind kind;
  int degree = 0;
  MilnorNumber milnor;
  std::optional<ElCertificate> certificate;
  /// Same computation with a random functional.
  std::optional<ElCertificate> cross_check;
  std::string note;
  /// Set when the two functionals disagree or a form is degenerate.
  std::optional<std::string> alarm;
};

ElDegree el_degree(const Polynomial& f, std::uint64_t seed = 0x5EED);

struct OracleResult {
  std::optional<int> degree;
  std::string note;
  double radius = 0;
  double target = 0;
  std::size_t samples = 0;    // winding: points on the circle
  std::size_t solutions = 0;  // preimage: distinct solutions counted
};

/// Winding number of t -> G(r cos t, r sin t).
OracleResult winding_degree_2d(const PolyMap& g, double radius);

/// Signed count of solutions of G(x) = v inside the ball of the given radius,
/// by damped Newton from deterministic quasi-random seeds. |v| is capped at
/// a quarter of the smallest |G| sampled on the sphere. Evidence only: roots
/// may be missed.
OracleResult preimage_degree(const PolyMap& g, double target_magnitude, std::size_t seeds,
                             std::uint64_t rng_seed, double radius);

struct DegreeAnalysis {
  ElDegree el;
  std::optional<OracleResult> winding;
  std::optional<OracleResult> preimage;
  /// "agree", "disagree", or "n/a" per oracle.
  std::string winding_agreement = "n/a";
  std::string preimage_agreement = "n/a";
  /// Disagreements of the winding oracle with a defined EL degree.
  std::vector<std::string> alarms;
  /// Disagreements of the preimage oracle, recorded as evidence notes.
  std::vector<std::string> evidence;
};

/// EL degree plus both oracles on grad f; homogeneous inputs use radius 1
/// and target 1, others radius 1/8 and target 1/64 with one halving retry.
DegreeAnalysis analyze_degree(const Polynomial& f, std::uint64_t seed = 0x5EED);

}  // namespace milnorkit
