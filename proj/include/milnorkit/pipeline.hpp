#pragma once

// The verify / degree / classify pipelines and the bundled example corpus.

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "milnorkit/problem.hpp"
#include "milnorkit/report.hpp"

namespace milnorkit {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int input_error = 2;
inline constexpr int alarm = 3;
}  // namespace exit_code

struct RunConfig {
  std::uint64_t seed = 0x5EED;
  /// Check groups for verify; empty selects all.
  std::set<std::string> checks;
  /// 1-based component for degree.
  std::size_t component = 1;
  /// Extra user assertions, added to those in the problem file.
  std::vector<std::string> assertions;
};

/// Check groups accepted by --checks.
const std::vector<std::string>& check_groups();

struct Outcome {
  Report report;
  int exit = exit_code::ok;
};

Outcome run_verify(const ProblemSpec& problem, const RunConfig& config);
Outcome run_degree(const ProblemSpec& problem, const RunConfig& config);
Outcome run_classify(const ProblemSpec& problem, const RunConfig& config);

struct CorpusEntry {
  std::string name;
  std::filesystem::path problem;
  std::filesystem::path expect;
};

/// Entries with both <name>.prob and <name>.expect, sorted by name.
std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir);

struct CorpusResult {
  std::string name;
  bool ok = false;
  std::vector<std::string> mismatches;
  /// Command -> sha256 of its machine report.
  std::vector<std::pair<std::string, std::string>> digests;
};

/// Runs one entry against its expectation file; never throws for bad
/// entries (they are reported as mismatches).
CorpusResult run_corpus_entry(const CorpusEntry& entry, std::uint64_t seed);

/// Runs every entry, in parallel, returning results in name order.
std::vector<CorpusResult> run_corpus(const std::filesystem::path& dir, std::uint64_t seed);

}  // namespace milnorkit
