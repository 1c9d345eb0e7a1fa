#pragma once

#include <string_view>

#include "milnorkit/polynomial.hpp"

namespace milnorkit {

/// Parses a polynomial expression over `context`.
///
/// Grammar (explicit '*' required, no implicit multiplication):
///
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' unary)?
///   primary := number | identifier | '(' sum ')'
///   number  := digits | digits '.' digits | '.' digits
///
/// Division is allowed only by nonzero constants, so "5/2*x" and
/// "x/2" both work. Exponents must evaluate to non-negative integers.
/// Throws ParseError (with line/column) on any failure.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& context);

}  // namespace milnorkit
