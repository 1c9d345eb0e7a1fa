#pragma once

// Verification reports and their human / machine serializations.

#include <json.hpp>
#include <string>
#include <vector>

#include "milnorkit/status.hpp"

namespace milnorkit {

using Json = nlohmann::ordered_json;

enum class ReportFormat { human, machine };

struct CheckEntry {
  std::string name;
  Status status;
  /// Nonzero residuals or counterexample points; required when failing.
  std::vector<std::string> witness;
  std::string note;
};

struct Report {
  std::string command;
  std::string source;
  std::string input_digest;
  Json config = Json::object();
  std::vector<CheckEntry> checks;
  /// Array of theorem applications (see classify.hpp), or null.
  Json classification = nullptr;
  /// Command-specific payload (e.g. the degree certificate), or null.
  Json result = nullptr;
  std::vector<std::string> notes;
  std::vector<std::string> alarms;

  /// Appends a check; throws std::logic_error for a failure without witness.
  void add(CheckEntry entry);
  bool any_failed() const;
};

Json to_json(const Report& r);

/// Deterministic serialization; the machine form is pretty-printed JSON
/// with a trailing newline.
std::string emit_report(const Report& r, ReportFormat format);

}  // namespace milnorkit
