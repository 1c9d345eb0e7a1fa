#pragma once

// Problem files: a JSON document with top-level keys
//
//   variables      list of names
//   maps           name -> list of component expressions
//   vector_fields  name -> list of components, one per variable
//   one_forms      name -> list of coefficients, one per variable
//   assertions     list of user flags
//   description    free text (optional)
//   notes          list of free-text remarks (optional)
//
// Any other key is an error.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "milnorkit/exterior.hpp"
#include "milnorkit/polymap.hpp"

namespace milnorkit {

/// User flags accepted in `assertions` and on the command line.
const std::vector<std::string>& known_assertions();

template <typename T>
struct Named {
  std::string name;
  T value;
};

struct ProblemSpec {
  ContextPtr context;
  std::vector<Named<PolyMap>> maps;
  std::vector<Named<VectorField>> vector_fields;
  std::vector<Named<DiffForm>> one_forms;
  std::vector<std::string> assertions;
  std::string description;
  std::vector<std::string> notes;
  /// "sha256:<hex>" of the source bytes.
  std::string digest;

  /// The first declared map; throws InputError if there is none.
  const Named<PolyMap>& primary_map() const;
};

/// Throws InputError (schema, dangling names, arity, syntax).
ProblemSpec parse_problem(std::string_view text);

/// Throws InputError, including for unreadable files.
ProblemSpec load_problem(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);

}  // namespace milnorkit
