#pragma once

#include <string_view>

namespace milnorkit {

enum class Status { holds, fails, inapplicable, unknown };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inapplicable: return "inapplicable";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

constexpr Status holds_if(bool condition) { return condition ? Status::holds : Status::fails; }

}  // namespace milnorkit
