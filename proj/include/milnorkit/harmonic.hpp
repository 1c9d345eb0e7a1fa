#pragma once

// Harmonicity, horizontal weak conformality and the singular locus of a
// polynomial map.

#include <optional>
#include <string>
#include <vector>

#include "milnorkit/exterior.hpp"
#include "milnorkit/polymap.hpp"
#include "milnorkit/status.hpp"

namespace milnorkit {

/// sum_i d^2 f / dx_i^2.
Polynomial laplacian(const Polynomial& f);

struct OneFormHarmonicity {
  Status status;
  DiffForm closedness;   // dw
  Polynomial divergence; // sum_i da_i/dx_i
};

/// Closed and co-closed; throws std::invalid_argument for degree != 1.
OneFormHarmonicity one_form_harmonic(const DiffForm& w);

struct GramResult {
  PolyMatrix gram;
  std::optional<Polynomial> lambda_sq;
  bool hwc = false;
};

GramResult gram(const PolyMap& f);

struct IndependenceResult {
  Status status;
  /// A nonzero maximal minor (column indices and value) when independent.
  std::vector<std::size_t> columns;
  std::optional<Polynomial> minor;
};

IndependenceResult functional_independence(const PolyMap& f);

struct HarmonicVerdict {
  Status status;
  Status laplace;  // condition (1): every component harmonic
  std::vector<Polynomial> laplacians;
  Status conformal;  // condition (2)
  GramResult gram;
  IndependenceResult independence;
  /// Set when p >= 2, conformality holds and some Laplacian does not vanish:
  /// polynomial horizontally weakly conformal maps are harmonic, so this
  /// signals a bug or a broken encoding.
  std::optional<std::string> alarm;
};

HarmonicVerdict is_harmonic_first_integral_map(const PolyMap& f);

struct HomothetyResult {
  Status status;  // holds, unknown or inapplicable; never fails
  /// <grad lambda^2, grad f_a> per component.
  std::vector<Polynomial> residuals;
  static constexpr const char* label = "sufficient test: grad(lambda^2) vertical";
};

HomothetyResult horizontally_homothetic_sufficient(const PolyMap& f);

struct SingularIdeal {
  std::vector<Polynomial> minors;
  /// All first partials, emitted when the map is known to be conformal.
  std::optional<std::vector<Polynomial>> partials;
};

SingularIdeal singular_ideal(const PolyMap& f, bool conformal = false);

}  // namespace milnorkit
