#pragma once

// Theorem engine: collects verified facts about a harmonic first integral
// map and applies the fibration, Euler characteristic, inclusion,
// classification and minimality theorems to them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnorkit/harmonic.hpp"
#include "milnorkit/local_degree.hpp"
#include "milnorkit/report.hpp"

namespace milnorkit {

// ---------------------------------------------------------------------------
// Real zeros of a map

struct OriginOnly {
  /// holds: V_F = {0} near the origin; fails: a nonzero real zero exists.
  Status status;
  /// "certified", "evidence" or "none".
  std::string strength;
  std::string evidence;
  /// A nonzero real common zero, printed; set when status fails.
  std::optional<std::string> witness;
  int complex_dimension = 0;
};

/// Decides whether the real common zero set of the components is {0}:
/// sum-of-squares refinement, homogeneous zero-dimensionality, rational
/// grid search, then rational lines A + tB with a real root of the gcd of
/// the restricted components.
OriginOnly decide_origin_only(const PolyMap& f);

// ---------------------------------------------------------------------------
// Milnor set

struct MilnorSetResult {
  Status status;
  /// Maximal minors of the Jacobian of (F, |x|^2).
  std::vector<Polynomial> generators;
  bool degenerate = false;
  std::size_t samples = 0;
  std::string note;
  std::optional<std::string> alarm;
};

/// For harmonic maps the condition holds by theorem; the sampling pass looks
/// for points of V_F \ {0} near the origin where V_F is smooth yet not
/// transverse to the sphere, which would contradict it.
MilnorSetResult milnor_set_check(const PolyMap& f, bool harmonic, std::uint64_t seed = 0x5EED);

// ---------------------------------------------------------------------------
// Facts

struct Fact {
  Status status;
  Json value = nullptr;
  std::string provenance;
  std::string note;
  bool user_asserted = false;
};

class FactBase {
 public:
  FactBase(std::size_t ambient, std::size_t p) : ambient_(ambient), p_(p) {}

  std::size_t ambient() const { return ambient_; }  // n + 1
  std::size_t p() const { return p_; }

  void set(const std::string& key, Fact fact) { facts_.insert_or_assign(key, std::move(fact)); }
  void erase(const std::string& key) { facts_.erase(key); }
  const Fact* get(const std::string& key) const;
  /// unknown when the fact is missing.
  Status status(const std::string& key) const;
  std::optional<long> integer(const std::string& key) const;
  std::vector<std::string> keys() const;
  Json to_json() const;

 private:
  std::size_t ambient_;
  std::size_t p_;
  std::map<std::string, Fact> facts_;
};

struct FactOptions {
  std::uint64_t seed = 0x5EED;
  std::vector<std::string> assertions;
};

/// Fact keys: harmonic_first_integral_map, homogeneous, isolated_singularity,
/// sing_dimension, origin_only, degree.k / milnor.k (k = 1..p),
/// horizontally_homothetic and any user assertion flag.
struct FactCollection {
  FactBase facts;
  std::vector<std::string> alarms;
  std::vector<std::string> notes;
};

FactCollection collect_facts(const PolyMap& f, const FactOptions& options = {});

// ---------------------------------------------------------------------------
// Theorem applications

struct Hypothesis {
  std::string name;
  Status status;
  std::string provenance;
  bool user_asserted = false;
};

struct TheoremApplication {
  std::string theorem;
  std::string instance;
  std::vector<Hypothesis> hypotheses;
  /// "applies", "fails hypothesis: <name>" or "undetermined".
  std::string applicability;
  std::vector<std::string> conclusions;
  Json payload = Json::object();
  std::vector<std::string> notes;

  bool applies() const { return applicability == "applies"; }
};

struct ClassificationReport {
  std::vector<TheoremApplication> theorems;
  std::vector<std::string> alarms;
  std::vector<std::string> notes;

  const TheoremApplication* find(const std::string& theorem, const std::string& instance = "") const;
};

/// Stable theorem ids in application order.
const std::vector<std::string>& theorem_ids();

ClassificationReport classify(const FactBase& facts);

Json to_json(const TheoremApplication& t);
Json to_json(const ClassificationReport& r);

}  // namespace milnorkit
