#include "milnorkit/report.hpp"

#include <sstream>
#include <stdexcept>

namespace milnorkit {

void Report::add(CheckEntry entry) {
  if (entry.status == Status::fails && entry.witness.empty()) {
    throw std::logic_error("failing check '" + entry.name + "' has no witness");
  }
  checks.push_back(std::move(entry));
}

bool Report::any_failed() const {
  for (const auto& c : checks) {
    if (c.status == Status::fails) return true;
  }
  return false;
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["config"] = r.config;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = std::string(to_string(c.status));
    e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    j["checks"].push_back(std::move(e));
  }
  j["classification"] = r.classification;
  if (!r.result.is_null()) j["result"] = r.result;
  j["notes"] = r.notes;
  j["alarms"] = r.alarms;
  return j;
}

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void human_payload(std::ostream& out, const Json& v, const std::string& indent) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out << indent << k << ":\n";
        human_payload(out, x, indent + "  ");
      } else {
        out << indent << k << ": " << scalar(x) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured()) {
        out << indent << "-\n";
        human_payload(out, x, indent + "  ");
      } else {
        out << indent << "- " << scalar(x) << "\n";
      }
    }
  } else {
    out << indent << scalar(v) << "\n";
  }
}

void human_theorem(std::ostream& out, const Json& t) {
  out << "  " << t["theorem"].get<std::string>();
  if (t.contains("instance")) out << " [" << t["instance"].get<std::string>() << "]";
  out << ": " << t["applicability"].get<std::string>() << "\n";
  for (const auto& h : t["hypotheses"]) {
    out << "    hypothesis " << h["name"].get<std::string>() << ": " << h["status"].get<std::string>();
    if (h.value("user_asserted", false)) out << " (user-asserted)";
    out << "  <- " << h["provenance"].get<std::string>() << "\n";
  }
  for (const auto& c : t["conclusions"]) out << "    => " << c.get<std::string>() << "\n";
  for (const auto& n : t["notes"]) out << "    note: " << n.get<std::string>() << "\n";
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::machine) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << r.command;
  if (!r.source.empty()) out << " " << r.source;
  out << "\n";
  out << "input " << r.input_digest << "\n";
  for (const auto& [k, v] : r.config.items()) out << "config " << k << " = " << scalar(v) << "\n";
  out << "\nchecks (" << r.checks.size() << ")\n";
  for (const auto& c : r.checks) {
    std::string s(to_string(c.status));
    out << "  " << s << std::string(14 - s.size(), ' ') << c.name << "\n";
    for (const auto& w : c.witness) out << "                  witness: " << w << "\n";
    if (!c.note.empty()) out << "                  note: " << c.note << "\n";
  }
  if (!r.result.is_null()) {
    out << "\nresult\n";
    human_payload(out, r.result, "  ");
  }
  if (r.classification.is_array()) {
    out << "\nclassification\n";
    for (const auto& t : r.classification) human_theorem(out, t);
  }
  if (!r.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : r.notes) out << "  " << n << "\n";
  }
  if (!r.alarms.empty()) {
    out << "\nALARMS\n";
    for (const auto& a : r.alarms) out << "  !! " << a << "\n";
  }
  return out.str();
}

}  // namespace milnorkit
