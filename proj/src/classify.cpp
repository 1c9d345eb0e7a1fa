#include "milnorkit/classify.hpp"

#include <algorithm>

#include "milnorkit/groebner.hpp"

namespace milnorkit {

// ---------------------------------------------------------------------------
// FactBase

const Fact* FactBase::get(const std::string& key) const {
  auto it = facts_.find(key);
  return it == facts_.end() ? nullptr : &it->second;
}

Status FactBase::status(const std::string& key) const {
  const Fact* f = get(key);
  return f ? f->status : Status::unknown;
}

std::optional<long> FactBase::integer(const std::string& key) const {
  const Fact* f = get(key);
  if (!f || f->status != Status::holds || !f->value.is_number_integer()) return std::nullopt;
  return f->value.get<long>();
}

std::vector<std::string> FactBase::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : facts_) out.push_back(k);
  return out;
}

Json FactBase::to_json() const {
  Json j = Json::object();
  for (const auto& [k, f] : facts_) {
    Json e;
    e["status"] = std::string(milnorkit::to_string(f.status));
    e["value"] = f.value;
    e["provenance"] = f.provenance;
    if (!f.note.empty()) e["note"] = f.note;
    if (f.user_asserted) e["user_asserted"] = true;
    j[k] = std::move(e);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Fact collection

namespace {

std::string degree_key(std::size_t k) { return "degree." + std::to_string(k); }
std::string milnor_key(std::size_t k) { return "milnor." + std::to_string(k); }

}  // namespace

FactCollection collect_facts(const PolyMap& f, const FactOptions& options) {
  const std::size_t n = f.arity(), p = f.size();
  FactCollection out{FactBase(n, p), {}, {}};
  FactBase& facts = out.facts;

  HarmonicVerdict hv = is_harmonic_first_integral_map(f);
  if (hv.alarm) out.alarms.push_back(*hv.alarm);
  {
    std::string note = "laplace " + std::string(to_string(hv.laplace)) + ", conformal " +
                       std::string(to_string(hv.conformal)) + ", independent " +
                       std::string(to_string(hv.independence.status));
    facts.set("harmonic_first_integral_map",
              {hv.status, nullptr, "harmonic: Laplacians, Gram matrix and a nonzero maximal minor", note});
  }

  {
    std::optional<unsigned> common;
    Status s = Status::holds;
    for (const auto& c : f.components()) {
      Homogeneity h = is_homogeneous(c);
      if (h.kind != Homogeneity::Kind::homogeneous || (common && *common != h.degree)) {
        s = Status::fails;
        break;
      }
      common = h.degree;
    }
    facts.set("homogeneous", {s, s == Status::holds ? Json(*common) : Json(nullptr),
                              "polynomial: every component homogeneous of one common degree", ""});
  }

  {
    SingularIdeal sing = singular_ideal(f, hv.gram.hwc);
    Json dims;
    Fact iso{Status::unknown, nullptr, "ideals: maximal minors of the Jacobian", ""};
    if (sing.minors.empty()) {
      dims["complex"] = n;
      dims["real"] = n;
      iso.status = Status::fails;
      iso.note = "every maximal minor vanishes: Sing F is the whole space";
    } else {
      std::vector<Rational> zero(n);
      bool at_origin = std::all_of(sing.minors.begin(), sing.minors.end(),
                                   [&](const Polynomial& m) { return evaluate(m, zero) == 0; });
      GroebnerBasis gb = buchberger(sing.minors);
      RealRefinement real = real_refinement(sing.minors);
      dims["complex"] = ideal_dimension(gb);
      dims["real"] = real.linear ? Json(real.dimension) : Json(nullptr);
      if (!at_origin) {
        iso.status = Status::fails;
        iso.note = "the origin is a regular point";
      } else if (ideal_dimension(gb) == 0) {
        iso.status = Status::holds;
        iso.note = "complex singular locus is finite";
      } else if (real.origin_only) {
        iso.status = Status::holds;
        iso.note = "real refinement of the singular ideal contains every variable";
      } else if (real.linear && real.dimension > 0) {
        iso.status = Status::fails;
        iso.note = "real singular locus is a linear subspace of dimension " + std::to_string(real.dimension);
      } else {
        bool cone = std::all_of(sing.minors.begin(), sing.minors.end(), [](const Polynomial& m) {
          return is_homogeneous(m).kind == Homogeneity::Kind::homogeneous;
        });
        OriginOnly oo{Status::unknown, "none", "", std::nullopt, 0};
        if (cone) oo = decide_origin_only(PolyMap(f.context(), sing.minors));
        if (oo.status == Status::fails && oo.witness) {
          iso.status = Status::fails;
          iso.note = "Sing F is a cone through the nonzero real point " + *oo.witness;
        } else {
          iso.note = "complex dimension " + std::to_string(ideal_dimension(gb)) + "; real locus not decided";
        }
      }
    }
    facts.set("sing_dimension", {Status::holds, dims, "ideals: Krull dimension of the singular ideal (complex) "
                                                      "and of its real refinement", ""});
    facts.set("isolated_singularity", iso);
  }

  {
    OriginOnly oo = decide_origin_only(f);
    Json v;
    v["strength"] = oo.strength;
    v["witness"] = oo.witness ? Json(*oo.witness) : Json(nullptr);
    v["complex_dimension"] = oo.complex_dimension;
    facts.set("origin_only", {oo.status, v, "real zero search", oo.evidence});
  }

  for (std::size_t k = 1; k <= p; ++k) {
    DegreeAnalysis a = analyze_degree(f[k - 1], options.seed);
    Json mu;
    switch (a.el.milnor.kind) {
      case MilnorNumber::Kind::finite: mu = a.el.milnor.value; break;
      case MilnorNumber::Kind::infinite: mu = "infinite"; break;
      case MilnorNumber::Kind::unsupported: mu = "unsupported"; break;
    }
    facts.set(milnor_key(k), {a.el.milnor.kind == MilnorNumber::Kind::finite ? Status::holds : Status::unknown, mu,
                              "ideals: dimension of the Jacobian quotient", a.el.milnor.note});
    Fact d{Status::unknown, nullptr, "local_degree: Eisenbud-Levine signature", a.el.note};
    if (a.el.kind == ElDegree::Kind::defined || a.el.kind == ElDegree::Kind::regular) {
      d.status = Status::holds;
      d.value = a.el.degree;
      d.note = "winding " + a.winding_agreement + ", preimage " + a.preimage_agreement;
    }
    facts.set(degree_key(k), d);
    for (const auto& al : a.alarms) out.alarms.push_back("f" + std::to_string(k) + ": " + al);
    for (const auto& e : a.evidence) out.notes.push_back("f" + std::to_string(k) + ": " + e);
  }

  {
    HomothetyResult h = horizontally_homothetic_sufficient(f);
    bool asserted = std::find(options.assertions.begin(), options.assertions.end(), "horizontally_homothetic") !=
                    options.assertions.end();
    if (h.status == Status::holds) {
      facts.set("horizontally_homothetic", {Status::holds, nullptr, std::string("harmonic: ") + HomothetyResult::label, ""});
    } else if (asserted) {
      facts.set("horizontally_homothetic", {Status::holds, nullptr, "user assertion", "", true});
    } else {
      facts.set("horizontally_homothetic",
                {Status::unknown, nullptr, std::string("harmonic: ") + HomothetyResult::label, "test inconclusive"});
    }
  }
  for (const auto& a : options.assertions) {
    if (a == "horizontally_homothetic") continue;
    facts.set(a, {Status::holds, nullptr, "user assertion", "", true});
  }

  {
    MilnorSetResult m = milnor_set_check(f, hv.status == Status::holds, options.seed);
    Json v;
    v["generators"] = m.generators.size();
    v["degenerate"] = m.degenerate;
    v["samples"] = m.samples;
    facts.set("milnor_set", {m.status, v, "milnor set: maximal minors of the Jacobian of (F, |x|^2)", m.note});
    if (m.alarm) out.alarms.push_back(*m.alarm);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorems

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "tube_fibration", "sphere_fibration", "fibration_equivalence", "euler_characteristic",
      "product_structure", "euler_equality", "link_euler", "ball_inclusion",
      "hopf_fiber", "quadratic_pencil", "minimal_fibers", "milnor_set_condition"};
  return ids;
}

const TheoremApplication* ClassificationReport::find(const std::string& theorem,
                                                     const std::string& instance) const {
  for (const auto& t : theorems) {
    if (t.theorem == theorem && (instance.empty() || t.instance == instance)) return &t;
  }
  return nullptr;
}

namespace {

Hypothesis from_fact(const FactBase& facts, const std::string& key, std::string label = "") {
  const Fact* f = facts.get(key);
  Hypothesis h{label.empty() ? key : label, Status::unknown, "missing fact '" + key + "'", false};
  if (f) {
    h.status = f->status;
    h.provenance = f->provenance;
    h.user_asserted = f->user_asserted;
  }
  return h;
}

Hypothesis arithmetic(std::string name, bool ok) {
  return {std::move(name), holds_if(ok), "arithmetic on (n+1, p)", false};
}

Hypothesis derived(std::string name, Status s, std::string provenance) {
  return {std::move(name), s, std::move(provenance), false};
}

TheoremApplication make(std::string id, std::string instance, std::vector<Hypothesis> hyps) {
  TheoremApplication t;
  t.theorem = std::move(id);
  t.instance = std::move(instance);
  t.hypotheses = std::move(hyps);
  t.applicability = "applies";
  for (const auto& h : t.hypotheses) {
    if (h.status == Status::fails || h.status == Status::inapplicable) {
      t.applicability = "fails hypothesis: " + h.name;
      return t;
    }
  }
  for (const auto& h : t.hypotheses) {
    if (h.status == Status::unknown) t.applicability = "undetermined";
  }
  return t;
}

std::string sup(long v) { return "^" + std::to_string(v); }

Status any_of3(std::initializer_list<Status> xs) {
  bool unknown = false;
  for (Status s : xs) {
    if (s == Status::holds) return Status::holds;
    if (s == Status::unknown) unknown = true;
  }
  return unknown ? Status::unknown : Status::fails;
}

Status all_of3(std::initializer_list<Status> xs) {
  bool unknown = false;
  for (Status s : xs) {
    if (s == Status::fails || s == Status::inapplicable) return Status::fails;
    if (s == Status::unknown) unknown = true;
  }
  return unknown ? Status::unknown : Status::holds;
}

}  // namespace

ClassificationReport classify(const FactBase& facts) {
  ClassificationReport out;
  const long N = static_cast<long>(facts.ambient());  // n + 1
  const long n = N - 1;
  const long p = static_cast<long>(facts.p());
  const bool even = N % 2 == 0;
  const Hypothesis hfim = from_fact(facts, "harmonic_first_integral_map");

  // existence of the fibrations, for F and every truncation F^j, j >= 2
  for (long j = std::max(p, 1L); j >= 2 || j == p; --j) {
    std::string inst = j == p ? "F" : "F^" + std::to_string(j);
    Hypothesis h = hfim;
    if (j != p) h.provenance += " (truncations inherit the property)";
    std::vector<Hypothesis> hyps{h, arithmetic("p >= 2", j >= 2)};
    auto tube = make("tube_fibration", inst, hyps);
    auto sphere = make("sphere_fibration", inst, hyps);
    auto equiv = make("fibration_equivalence", inst, hyps);
    if (tube.applies()) {
      tube.conclusions.push_back(inst + " admits a Milnor tube fibration B_e ∩ " + inst + "^-1(S_h) -> S_h");
      sphere.conclusions.push_back(inst + " admits the Milnor sphere fibration Psi = " + inst + "/|" + inst +
                                   "|: S" + sup(n) + "_e \\ K_e -> S" + sup(j - 1));
      equiv.conclusions.push_back("the tube and sphere fibrations of " + inst + " are equivalent (Psi = " + inst +
                                  "| o h)");
      equiv.conclusions.push_back("Milnor fiber M_" + inst + " is diffeomorphic to Psi^-1(y)");
    }
    if (p == 1) {
      tube.notes.push_back("single first integral: Disc f = {0}");
    }
    out.theorems.push_back(std::move(tube));
    out.theorems.push_back(std::move(sphere));
    out.theorems.push_back(std::move(equiv));
    if (j <= 2) break;
  }

  // Euler characteristic of the Milnor fiber
  std::optional<long> chi;
  {
    std::vector<Hypothesis> hyps{hfim, arithmetic("p >= 2", p >= 2), from_fact(facts, "isolated_singularity")};
    if (even) hyps.push_back(from_fact(facts, "degree.1", "deg_0 grad f1 computed"));
    auto t = make("euler_characteristic", "", hyps);
    std::vector<std::pair<long, long>> degrees;
    for (long k = 1; k <= p; ++k) {
      if (auto d = facts.integer("degree." + std::to_string(k))) degrees.emplace_back(k, *d);
    }
    if (t.applies()) {
      if (even) {
        long d = *facts.integer("degree.1");
        chi = 1 - d;
        t.conclusions.push_back("chi(M_p) = 1 - deg_0 grad f1 = 1 - (" + std::to_string(d) + ") = " +
                                std::to_string(*chi));
        t.conclusions.push_back("deg_0 grad f_k = " + std::to_string(d) + " for every component");
        t.payload["degree"] = d;
        for (auto [k, dk] : degrees) {
          if (dk != d) {
            out.alarms.push_back("component degrees disagree: deg_0 grad f" + std::to_string(k) + " = " +
                                 std::to_string(dk) + " but deg_0 grad f1 = " + std::to_string(d));
          }
        }
      } else {
        chi = 1;
        t.conclusions.push_back("chi(M_p) = 1");
        t.conclusions.push_back("deg_0 grad f_k = 0 for every component");
        for (auto [k, dk] : degrees) {
          if (dk != 0) {
            out.alarms.push_back("odd ambient dimension but deg_0 grad f" + std::to_string(k) + " = " +
                                 std::to_string(dk));
          }
        }
      }
      t.payload["chi"] = *chi;
    } else if (t.applicability == "undetermined" && even && !facts.integer("degree.1")) {
      t.notes.push_back("chi = 1 - deg_0 grad f1 with degree undetermined");
    }
    out.theorems.push_back(std::move(t));
  }
  const Status chi_known = chi ? Status::holds : Status::unknown;

  {
    auto t = make("product_structure", "", {hfim, arithmetic("p >= 2", p >= 2)});
    if (t.applies()) {
      for (long j = 1; j < p; ++j) {
        t.conclusions.push_back("M_" + std::to_string(j) + " is homeomorphic to M_p x B" + sup(p - j));
      }
    }
    out.theorems.push_back(std::move(t));
  }
  {
    auto t = make("euler_equality", "",
                  {hfim, arithmetic("p >= 2", p >= 2), derived("chi(M_p) known", chi_known, "euler_characteristic")});
    if (t.applies()) {
      for (long j = 1; j < p; ++j) {
        std::string s = std::to_string(j);
        t.conclusions.push_back("chi(M_" + s + ") = chi(N_" + s + ") = chi(N_" + s + "^-) = chi(M_p) = " +
                                std::to_string(*chi));
      }
      t.payload["chi"] = *chi;
    }
    out.theorems.push_back(std::move(t));
  }

  for (long j = 1; j <= std::max(p, 1L); ++j) {
    auto t = make("link_euler", "j=" + std::to_string(j),
                  {hfim, arithmetic("p >= 2", p >= 2), arithmetic("j odd", j % 2 == 1),
                   derived("chi(M_p) known", chi_known, "euler_characteristic")});
    if (t.applies()) {
      long v = even ? 2 * *chi : 2 - 2 * *chi;
      std::string inst = j == p ? "F" : "F^" + std::to_string(j);
      t.conclusions.push_back("chi(V_" + inst + " ∩ S" + sup(n) + "_e) = " +
                              (even ? "2 chi(M_p)" : std::string("2 - 2 chi(M_p)")) + " = " + std::to_string(v));
      t.payload["link_chi"] = v;
    }
    out.theorems.push_back(std::move(t));
  }

  {
    auto deg_zero = [&]() {
      auto d = facts.integer("degree.1");
      if (!d) return Status::unknown;
      return holds_if(*d == 0);
    };
    auto pair = [&](long a, long b) { return N == a && p == b; };
    auto fact = [&](const char* k) { return facts.status(k); };
    std::vector<Status> cond = {
        all_of3({holds_if(pair(4, 2)), deg_zero()}),
        all_of3({holds_if(pair(5, 2)), fact("simply_connected")}),
        all_of3({holds_if(pair(6, 3)), any_of3({fact("link_connected"), deg_zero()})}),
        all_of3({holds_if(pair(8, 5)), any_of3({fact("link_nonempty"), deg_zero()})}),
        holds_if(p == n && !pair(4, 3)),
        holds_if(n - p == 1 && !pair(4, 2)),
        holds_if(n - p + 1 == 3 && !pair(5, 2) && !pair(6, 3) && !pair(8, 5)),
    };
    Status any = Status::fails;
    std::string which;
    for (std::size_t i = 0; i < cond.size(); ++i) {
      if (cond[i] == Status::holds) {
        any = Status::holds;
        which += (which.empty() ? "" : ",") + std::to_string(i + 1);
      } else if (cond[i] == Status::unknown && any != Status::holds) {
        any = Status::unknown;
      }
    }
    auto t = make("ball_inclusion", "",
                  {hfim, from_fact(facts, "isolated_singularity"),
                   derived("one of the conditions (1)-(7)", any, "arithmetic on (n+1, p), degrees and user flags")});
    t.payload["conditions"] = Json::array();
    for (std::size_t i = 0; i < cond.size(); ++i) {
      t.payload["conditions"].push_back({{"condition", i + 1}, {"status", std::string(to_string(cond[i]))}});
    }
    if (t.applies()) {
      t.conclusions.push_back("level sets of the solutions of the system are included in B" + sup(n - p + 1) +
                              " x B^(" + std::to_string(p) + "-j) for any j (condition " + which + ")");
    }
    if (pair(4, 2)) {
      if (auto d = facts.integer("degree.1"); d && *d != 0) {
        t.notes.push_back("deg_0 grad f1 = " + std::to_string(*d) + " != 0 excludes condition (1)");
      }
    }
    out.theorems.push_back(std::move(t));
  }

  {
    auto deg = facts.integer("homogeneous");
    auto t = make("hopf_fiber", "",
                  {hfim, from_fact(facts, "homogeneous", "components homogeneous of one degree d"),
                   arithmetic("p >= 3", p >= 3), from_fact(facts, "origin_only", "V_F = {0}")});
    t.notes.push_back("the case lists pair positionally: (n, p) in {(3,3), (7,5), (15,9)}");
    if (t.applies()) {
      t.payload["n"] = n;
      t.payload["p"] = p;
      t.payload["d"] = *deg;
      t.conclusions.push_back("level sets of the solutions of the system are included in a Hopf fibration fiber");
      bool listed = *deg == 2 && ((n == 3 && p == 3) || (n == 7 && p == 5) || (n == 15 && p == 9));
      t.conclusions.push_back("(n, p, d) = (" + std::to_string(n) + ", " + std::to_string(p) + ", " +
                              std::to_string(*deg) + ") in {(3,3,2), (7,5,2), (15,9,2)}");
      if (!listed) {
        out.alarms.push_back("hopf_fiber: hypotheses verified but (n, p, d) = (" + std::to_string(n) + ", " +
                             std::to_string(p) + ", " + std::to_string(*deg) +
                             ") is not a Hopf case; the V_F = {0} evidence or the encoding is wrong");
      }
    }
    if (const Fact* f = facts.get("origin_only"); f && f->status == Status::fails && f->value.contains("witness")) {
      t.notes.push_back("nonzero common zero: " + f->value["witness"].get<std::string>());
    }
    out.theorems.push_back(std::move(t));
  }

  {
    auto deg = facts.integer("homogeneous");
    Hypothesis quad = from_fact(facts, "homogeneous", "components homogeneous of degree 2");
    if (quad.status == Status::holds && deg != 2) quad.status = Status::fails;
    auto t = make("quadratic_pencil", "",
                  {hfim, arithmetic("ambient dimension even", even), arithmetic("p = 2", p == 2), quad});
    if (t.applies()) {
      long m = N / 2;
      std::string sphere = "S" + sup(m - 1);
      t.conclusions.push_back("Sing F = {0}");
      t.conclusions.push_back("Psi_F is equivalent to Psi_f with f = l1*z1^2 + ... + l" + std::to_string(m) + "*z" +
                              std::to_string(m) + "^2 up to isometry");
      t.conclusions.push_back("mu = 1: the Milnor fiber is homotopy equivalent to " + sphere);
      t.conclusions.push_back("level sets of the solutions of the system are included in " + sphere +
                              " up to isometry");
      t.payload["m"] = m;
      t.payload["fiber"] = sphere;
      t.payload["milnor_number"] = 1;
      if (facts.status("isolated_singularity") == Status::fails) {
        out.alarms.push_back("quadratic_pencil applies but the singular locus is not isolated");
      }
    }
    out.theorems.push_back(std::move(t));
  }

  {
    Hypothesis cond{"p = 3, or p >= 4 with Psi_F horizontally homothetic", Status::unknown,
                    "no condition matches p = " + std::to_string(p), false};
    if (p == 3) {
      cond = arithmetic("(1) p = 3", true);
    } else if (p >= 4) {
      cond = from_fact(facts, "horizontally_homothetic", "(2) p >= 4 and Psi_F horizontally homothetic");
    }
    auto t = make("minimal_fibers", "",
                  {hfim, from_fact(facts, "homogeneous", "components homogeneous of one degree"), cond});
    if (t.applies()) {
      t.conclusions.push_back("the fibers of the Milnor sphere fibration Psi_F: S" + sup(n) + "_e \\ K_e -> S" +
                              sup(p - 1) + " are minimal");
    }
    out.theorems.push_back(std::move(t));
  }

  {
    auto t = make("milnor_set_condition", "", {hfim, arithmetic("p >= 2", p >= 2)});
    if (t.applies()) {
      t.conclusions.push_back("closure(M(F) \\ F^-1(0)) ∩ F^-1(0) = {0}");
    }
    if (const Fact* f = facts.get("milnor_set")) {
      t.payload["sampling"] = std::string(to_string(f->status));
      if (!f->note.empty()) t.notes.push_back(f->note);
    }
    out.theorems.push_back(std::move(t));
  }
  return out;
}

Json to_json(const TheoremApplication& t) {
  Json j;
  j["theorem"] = t.theorem;
  if (!t.instance.empty()) j["instance"] = t.instance;
  j["applicability"] = t.applicability;
  j["hypotheses"] = Json::array();
  for (const auto& h : t.hypotheses) {
    Json e;
    e["name"] = h.name;
    e["status"] = std::string(to_string(h.status));
    e["provenance"] = h.provenance;
    if (h.user_asserted) e["user_asserted"] = true;
    j["hypotheses"].push_back(std::move(e));
  }
  j["conclusions"] = t.conclusions;
  j["payload"] = t.payload;
  j["notes"] = t.notes;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j = Json::array();
  for (const auto& t : r.theorems) j.push_back(to_json(t));
  return j;
}

}  // namespace milnorkit
