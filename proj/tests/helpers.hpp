#pragma once

#include <string>
#include <vector>

#include "milnorkit/expr.hpp"
#include "milnorkit/polynomial.hpp"

namespace testing {

inline milnorkit::ContextPtr ctx(std::vector<std::string> names) {
  return milnorkit::VariableContext::make(std::move(names));
}

inline milnorkit::Polynomial P(const milnorkit::ContextPtr& c, const std::string& text) {
  return milnorkit::parse_polynomial(text, c);
}

}  // namespace testing
