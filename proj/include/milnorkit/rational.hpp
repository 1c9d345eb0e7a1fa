#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace milnorkit {

// Exact rational numbers. gmpxx keeps results of arithmetic canonical;
// values built from strings must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "n/d" or a finite decimal "a.b" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational make_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

double to_double(const Rational& q);

}  // namespace milnorkit
