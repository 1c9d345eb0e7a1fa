#include "milnorkit/problem.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "milnorkit/error.hpp"
#include "milnorkit/expr.hpp"

namespace milnorkit {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& known_assertions() {
  static const std::vector<std::string> flags = {"horizontally_homothetic", "simply_connected",
                                                 "link_connected", "link_nonempty"};
  return flags;
}

const Named<PolyMap>& ProblemSpec::primary_map() const {
  if (maps.empty()) throw InputError("problem declares no map");
  return maps.front();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InputError(where + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<Polynomial> expressions(const Json& j, const std::string& where, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  auto texts = string_list(j, where);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(texts[i], ctx));
    } catch (const ParseError& e) {
      throw InputError(where + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

const Json& section(const Json& doc, const std::string& key) {
  static const Json empty = Json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) throw InputError(key + ": expected an object of named entries");
  return *it;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed problem file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file must be an object");
  static const std::set<std::string> allowed = {"variables", "maps",        "vector_fields", "one_forms",
                                                "assertions", "description", "notes"};
  for (const auto& [key, _] : doc.items()) {
    if (!allowed.contains(key)) throw InputError("unknown key '" + key + "'");
  }
  if (!doc.contains("variables")) throw InputError("missing key 'variables'");

  ProblemSpec p;
  p.context = VariableContext::make(string_list(doc["variables"], "variables"));
  const std::size_t n = p.context->arity();

  for (const auto& [name, body] : section(doc, "maps").items()) {
    auto comps = expressions(body, "maps." + name, p.context);
    if (comps.empty()) throw InputError("maps." + name + ": a map needs at least one component");
    p.maps.push_back({name, PolyMap(p.context, std::move(comps))});
  }
  auto per_variable = [&](const std::string& where, const Json& body) {
    auto comps = expressions(body, where, p.context);
    if (comps.size() != n) {
      throw InputError(where + ": arity mismatch: " + std::to_string(comps.size()) + " entries for " +
                       std::to_string(n) + " variables");
    }
    return comps;
  };
  for (const auto& [name, body] : section(doc, "vector_fields").items()) {
    p.vector_fields.push_back({name, VectorField(p.context, per_variable("vector_fields." + name, body))});
  }
  for (const auto& [name, body] : section(doc, "one_forms").items()) {
    p.one_forms.push_back({name, one_form(p.context, per_variable("one_forms." + name, body))});
  }
  if (doc.contains("assertions")) {
    p.assertions = string_list(doc["assertions"], "assertions");
    const auto& known = known_assertions();
    for (const auto& a : p.assertions) {
      if (std::find(known.begin(), known.end(), a) == known.end()) {
        throw InputError("assertions: unknown flag '" + a + "'");
      }
    }
  }
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) throw InputError("description: expected a string");
    p.description = doc["description"].get<std::string>();
  }
  if (doc.contains("notes")) p.notes = string_list(doc["notes"], "notes");
  p.digest = "sha256:" + sha256_hex(text);
  return p;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

}  // namespace milnorkit
