#include "milnorkit/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "milnorkit/classify.hpp"
#include "milnorkit/error.hpp"
#include "milnorkit/harmonic.hpp"
#include "milnorkit/local_degree.hpp"

namespace milnorkit {

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups = {
      "first_integral",      "involutivity", "exact_form", "frobenius",   "form_first_integral",
      "one_form_harmonic",   "laplacian",    "conformality", "independence"};
  return groups;
}

namespace {

Json config_json(const ProblemSpec& problem, const RunConfig& config, const std::string& command) {
  Json c;
  c["command"] = command;
  c["seed"] = config.seed;
  if (command == "verify") {
    c["checks"] = config.checks.empty() ? Json("all") : Json(std::vector<std::string>(config.checks.begin(),
                                                                                        config.checks.end()));
  }
  if (command == "degree") c["component"] = config.component;
  std::vector<std::string> all = problem.assertions;
  for (const auto& a : config.assertions) {
    if (std::find(all.begin(), all.end(), a) == all.end()) all.push_back(a);
  }
  c["assertions"] = all;
  c["map"] = problem.primary_map().name;
  return c;
}

Report base_report(const ProblemSpec& problem, const RunConfig& config, const std::string& command) {
  Report r;
  r.command = command;
  r.input_digest = problem.digest;
  r.config = config_json(problem, config, command);
  r.notes = problem.notes;
  return r;
}

int exit_for(const Report& r) {
  if (!r.alarms.empty()) return exit_code::alarm;
  return r.any_failed() ? exit_code::check_failed : exit_code::ok;
}

std::string comp(std::size_t k) { return "f" + std::to_string(k + 1); }

std::vector<std::string> nonzero(const std::string& label, const DiffForm& w) {
  if (w.is_zero()) return {};
  return {label + " = " + to_string(w)};
}

// The constant c making w - c*df sparsest; ties prefer c = 1.
Rational best_multiple(const DiffForm& w, const DiffForm& df) {
  std::map<Rational, std::size_t> votes;
  for (const auto& [mask, coeff] : w.coefficients()) {
    Polynomial d = df.coefficient(mask);
    for (const auto& t : coeff.terms()) {
      Rational b = d.coefficient(t.monomial);
      if (b != 0) ++votes[t.coefficient / b];
    }
  }
  Rational best(1);
  std::size_t top = votes.contains(best) ? votes[best] : 0;
  for (const auto& [c, n] : votes) {
    if (n > top) {
      best = c;
      top = n;
    }
  }
  return best;
}

}  // namespace

Outcome run_verify(const ProblemSpec& problem, const RunConfig& config) {
  for (const auto& c : config.checks) {
    const auto& g = check_groups();
    if (std::find(g.begin(), g.end(), c) == g.end()) throw InputError("unknown check group '" + c + "'");
  }
  auto want = [&](const std::string& g) { return config.checks.empty() || config.checks.contains(g); };
  Report r = base_report(problem, config, "verify");
  const PolyMap& f = problem.primary_map().value;
  const std::size_t p = f.size();

  std::vector<VectorField> fields;
  std::vector<std::string> field_names;
  for (const auto& v : problem.vector_fields) {
    fields.push_back(v.value);
    field_names.push_back(v.name);
  }
  std::vector<DiffForm> forms;
  std::vector<std::string> form_names;
  for (const auto& w : problem.one_forms) {
    forms.push_back(w.value);
    form_names.push_back(w.name);
  }

  if (want("first_integral") && !fields.empty()) {
    FirstIntegralResult fi = first_integral_check(f, fields);
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t l = 0; l < fields.size(); ++l) {
        const Polynomial& res = fi.residuals[k][l];
        CheckEntry e{"first_integral[" + comp(k) + ", " + field_names[l] + "]", holds_if(res.is_zero()), {}, ""};
        if (!res.is_zero()) e.witness.push_back("d" + comp(k) + "(" + field_names[l] + ") = " + to_string(res));
        r.add(std::move(e));
      }
    }
  }
  if (want("involutivity") && !fields.empty()) {
    InvolutivityResult inv = involutivity_check(fields);
    CheckEntry e{"involutivity[" + std::to_string(fields.size()) + " fields]", inv.status, {},
                 InvolutivityResult::criterion};
    if (inv.residual) {
      e.witness.push_back("[" + field_names[inv.first] + ", " + field_names[inv.second] + "] ^ ... = " +
                          to_string(*inv.residual));
    }
    r.add(std::move(e));
  }
  if (want("exact_form")) {
    for (std::size_t j = 0; j < forms.size() && j < p; ++j) {
      DiffForm df = differential(f[j]);
      Rational c = best_multiple(forms[j], df);
      DiffForm res = forms[j] - df.scaled(Polynomial(f.context(), c));
      std::string lhs = c == 1 ? "d" + comp(j) : to_string(c) + "*d" + comp(j);
      CheckEntry e{"exact_form[" + form_names[j] + " ~ d" + comp(j) + "]", holds_if(res.is_zero()),
                   nonzero(form_names[j] + (c < 0 ? " + " + to_string(Rational(-c)) + "*d" + comp(j) : " - " + lhs), res),
                   ""};
      if (c != 1) e.note = form_names[j] + " compared with " + lhs;
      r.add(std::move(e));
    }
  }
  if (want("frobenius") && !forms.empty()) {
    auto fr = frobenius_check(forms);
    for (std::size_t j = 0; j < fr.size(); ++j) {
      r.add({"frobenius[" + form_names[j] + "]", fr[j].status,
             nonzero("d" + form_names[j] + " ^ (others)", fr[j].residual), ""});
    }
  }
  if (want("form_first_integral") && !forms.empty()) {
    auto ff = form_first_integral_check(f, forms);
    for (std::size_t k = 0; k < ff.size(); ++k) {
      r.add({"form_first_integral[" + comp(k) + "]", ff[k].status,
             nonzero("d" + comp(k) + " ^ " + std::to_string(forms.size()) + " forms", ff[k].residual), ""});
    }
  }
  if (want("one_form_harmonic")) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      OneFormHarmonicity h = one_form_harmonic(forms[j]);
      CheckEntry e{"one_form_harmonic[" + form_names[j] + "]", h.status, nonzero("d" + form_names[j], h.closedness),
                   ""};
      if (!h.divergence.is_zero()) e.witness.push_back("div " + form_names[j] + " = " + to_string(h.divergence));
      r.add(std::move(e));
    }
  }
  HarmonicVerdict hv = is_harmonic_first_integral_map(f);
  if (hv.alarm) r.alarms.push_back(*hv.alarm);
  if (want("laplacian")) {
    for (std::size_t k = 0; k < p; ++k) {
      const Polynomial& l = hv.laplacians[k];
      CheckEntry e{"laplacian[" + comp(k) + "]", holds_if(l.is_zero()), {}, ""};
      if (!l.is_zero()) e.witness.push_back("Laplacian " + comp(k) + " = " + to_string(l));
      r.add(std::move(e));
    }
  }
  if (want("conformality")) {
    CheckEntry e{"conformality", hv.conformal, {}, ""};
    const auto& g = hv.gram.gram;
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) {
        if (!g[a][b].is_zero()) {
          e.witness.push_back("<grad " + comp(a) + ", grad " + comp(b) + "> = " + to_string(g[a][b]));
        }
      }
      if (a > 0 && g[a][a] != g[0][0]) {
        e.witness.push_back("|grad " + comp(a) + "|^2 - |grad f1|^2 = " + to_string(g[a][a] - g[0][0]));
      }
    }
    if (hv.gram.lambda_sq) e.note = "lambda^2 = " + to_string(*hv.gram.lambda_sq);
    r.add(std::move(e));
  }
  if (want("independence")) {
    CheckEntry e{"independence", hv.independence.status, {}, ""};
    if (hv.independence.status == Status::fails) {
      e.witness.push_back(p > f.arity() ? "more components than variables"
                                        : "every maximal minor of the Jacobian vanishes identically");
    } else if (hv.independence.minor) {
      std::ostringstream cols;
      for (std::size_t i = 0; i < hv.independence.columns.size(); ++i) {
        cols << (i ? "," : "") << f.context()->name(hv.independence.columns[i]);
      }
      e.note = "minor on columns (" + cols.str() + ") = " + to_string(*hv.independence.minor);
    }
    r.add(std::move(e));
  }
  Outcome o{std::move(r), 0};
  o.exit = exit_for(o.report);
  return o;
}

namespace {

Json oracle_json(const std::optional<OracleResult>& o) {
  if (!o) return nullptr;
  Json j;
  j["degree"] = o->degree ? Json(*o->degree) : Json(nullptr);
  j["radius"] = o->radius;
  if (o->target > 0) j["target"] = o->target;
  j["samples"] = o->samples;
  if (o->solutions > 0) j["solutions"] = o->solutions;
  j["note"] = o->note;
  return j;
}

Json certificate_json(const ElCertificate& c, const VariableContext& ctx) {
  Json j;
  j["basis"] = Json::array();
  for (const auto& m : c.basis) j["basis"].push_back(to_string(m, ctx));
  auto vec = [](const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  j["hessian_residue"] = vec(c.hessian_residue);
  j["functional"] = vec(c.functional);
  j["inertia"] = {{"positive", c.inertia.positive}, {"negative", c.inertia.negative}, {"zero", c.inertia.zero}};
  j["signature"] = c.inertia.signature();
  return j;
}

}  // namespace

Outcome run_degree(const ProblemSpec& problem, const RunConfig& config) {
  const PolyMap& f = problem.primary_map().value;
  if (config.component < 1 || config.component > f.size()) {
    throw InputError("component " + std::to_string(config.component) + " out of range 1.." +
                     std::to_string(f.size()));
  }
  Report r = base_report(problem, config, "degree");
  const Polynomial& fk = f[config.component - 1];
  DegreeAnalysis a = analyze_degree(fk, config.seed);
  Json res;
  res["component"] = config.component;
  res["polynomial"] = to_string(fk);
  switch (a.el.milnor.kind) {
    case MilnorNumber::Kind::finite: res["milnor_number"] = a.el.milnor.value; break;
    case MilnorNumber::Kind::infinite: res["milnor_number"] = "infinite"; break;
    case MilnorNumber::Kind::unsupported: res["milnor_number"] = "unsupported"; break;
  }
  static const char* kinds[] = {"defined", "regular", "infinite", "unsupported"};
  res["kind"] = kinds[static_cast<int>(a.el.kind)];
  bool has_degree = a.el.kind == ElDegree::Kind::defined || a.el.kind == ElDegree::Kind::regular;
  res["degree"] = has_degree ? Json(a.el.degree) : Json(nullptr);
  if (!a.el.note.empty()) res["note"] = a.el.note;
  if (a.el.certificate) res["certificate"] = certificate_json(*a.el.certificate, *f.context());
  if (a.el.cross_check) {
    res["cross_check"] = certificate_json(*a.el.cross_check, *f.context());
    res["cross_check"]["seed"] = config.seed;
  }
  res["oracles"] = {{"winding", oracle_json(a.winding)}, {"preimage", oracle_json(a.preimage)}};
  res["agreement"] = {{"winding", a.winding_agreement}, {"preimage", a.preimage_agreement}};
  r.result = std::move(res);
  r.alarms = a.alarms;
  for (const auto& e : a.evidence) r.notes.push_back(e);
  Outcome o{std::move(r), 0};
  o.exit = exit_for(o.report);
  return o;
}

Outcome run_classify(const ProblemSpec& problem, const RunConfig& config) {
  Report r = base_report(problem, config, "classify");
  FactOptions opts;
  opts.seed = config.seed;
  opts.assertions = problem.assertions;
  for (const auto& a : config.assertions) {
    const auto& known = known_assertions();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw InputError("unknown assertion flag '" + a + "'");
    }
    if (std::find(opts.assertions.begin(), opts.assertions.end(), a) == opts.assertions.end()) {
      opts.assertions.push_back(a);
    }
  }
  FactCollection fc = collect_facts(problem.primary_map().value, opts);
  ClassificationReport cls = classify(fc.facts);
  r.classification = to_json(cls);
  r.result = {{"facts", fc.facts.to_json()}};
  for (const auto& n : fc.notes) r.notes.push_back(n);
  for (const auto& n : cls.notes) r.notes.push_back(n);
  r.alarms = fc.alarms;
  for (const auto& a : cls.alarms) r.alarms.push_back(a);
  Outcome o{std::move(r), 0};
  o.exit = o.report.alarms.empty() ? exit_code::ok : exit_code::alarm;
  return o;
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> out;
  if (!std::filesystem::is_directory(dir)) throw InputError("corpus directory '" + dir.string() + "' not found");
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".prob") continue;
    auto expect = e.path();
    expect.replace_extension(".expect");
    if (std::filesystem::exists(expect)) out.push_back({e.path().stem().string(), e.path(), expect});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

namespace {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

std::string theorem_key(const Json& t) {
  std::string k = t["theorem"].get<std::string>();
  if (t.contains("instance")) k += "[" + t["instance"].get<std::string>() + "]";
  return k;
}

void compare_exit(const std::string& cmd, const Json& expect, int got, std::vector<std::string>& bad) {
  if (expect.contains("exit") && expect["exit"].get<int>() != got) {
    bad.push_back(cmd + ": exit " + std::to_string(got) + ", expected " + std::to_string(expect["exit"].get<int>()));
  }
}

void compare_verify(const Json& expect, const Outcome& o, std::vector<std::string>& bad) {
  compare_exit("verify", expect, o.exit, bad);
  if (!expect.contains("checks")) return;
  for (const auto& [name, want] : expect["checks"].items()) {
    auto it = std::find_if(o.report.checks.begin(), o.report.checks.end(),
                           [&](const CheckEntry& c) { return c.name == name; });
    if (it == o.report.checks.end()) {
      bad.push_back("verify: check '" + name + "' missing");
      continue;
    }
    std::string status = want.is_string() ? want.get<std::string>() : want["status"].get<std::string>();
    if (std::string(to_string(it->status)) != status) {
      bad.push_back("verify: " + name + " is " + std::string(to_string(it->status)) + ", expected " + status);
    }
    if (want.is_object() && want.contains("witness") && want["witness"] != Json(it->witness)) {
      bad.push_back("verify: " + name + " witness " + Json(it->witness).dump() + ", expected " +
                    want["witness"].dump());
    }
  }
}

void compare_fields(const std::string& where, const Json& expect, const Json& got, std::vector<std::string>& bad) {
  for (const auto& [k, v] : expect.items()) {
    if (k == "component" || k == "exit") continue;
    if (!got.contains(k) || got[k] != v) {
      bad.push_back(where + ": " + k + " = " + (got.contains(k) ? got[k].dump() : "missing") + ", expected " +
                    v.dump());
    }
  }
}

void compare_classify(const Json& expect, const Outcome& o, std::vector<std::string>& bad) {
  compare_exit("classify", expect, o.exit, bad);
  std::map<std::string, Json> by_key;
  for (const auto& t : o.report.classification) by_key[theorem_key(t)] = t;
  if (expect.contains("theorems")) {
    for (const auto& [k, want] : expect["theorems"].items()) {
      auto it = by_key.find(k);
      if (it == by_key.end()) {
        bad.push_back("classify: theorem '" + k + "' missing");
      } else if (it->second["applicability"] != want) {
        bad.push_back("classify: " + k + " is '" + it->second["applicability"].get<std::string>() + "', expected '" +
                      want.get<std::string>() + "'");
      }
    }
  }
  if (expect.contains("payload")) {
    for (const auto& [k, want] : expect["payload"].items()) {
      auto dot = k.rfind('.');
      auto it = by_key.find(k.substr(0, dot));
      std::string field = k.substr(dot + 1);
      if (it == by_key.end() || !it->second["payload"].contains(field) || it->second["payload"][field] != want) {
        bad.push_back("classify: payload " + k + " mismatch, expected " + want.dump());
      }
    }
  }
  if (expect.contains("facts")) {
    const Json& facts = o.report.result["facts"];
    for (const auto& [k, want] : expect["facts"].items()) {
      if (!facts.contains(k)) {
        bad.push_back("classify: fact '" + k + "' missing");
        continue;
      }
      compare_fields("classify: fact " + k, want, facts[k], bad);
    }
  }
}

}  // namespace

CorpusResult run_corpus_entry(const CorpusEntry& entry, std::uint64_t seed) {
  CorpusResult res;
  res.name = entry.name;
  try {
    Json expect = read_json(entry.expect);
    static const std::set<std::string> allowed = {"verify", "degree", "classify"};
    for (const auto& [k, _] : expect.items()) {
      if (!allowed.contains(k)) throw InputError("unknown expectation key '" + k + "'");
    }
    ProblemSpec problem = load_problem(entry.problem);
    RunConfig config;
    config.seed = seed;
    auto digest = [&](const std::string& cmd, const Outcome& o) {
      res.digests.emplace_back(cmd, sha256_hex(emit_report(o.report, ReportFormat::machine)));
    };
    if (expect.contains("verify")) {
      Outcome o = run_verify(problem, config);
      compare_verify(expect["verify"], o, res.mismatches);
      digest("verify", o);
    }
    if (expect.contains("degree")) {
      for (const auto& d : expect["degree"]) {
        RunConfig c = config;
        c.component = d.value("component", 1u);
        Outcome o = run_degree(problem, c);
        compare_exit("degree", d, o.exit, res.mismatches);
        Json got = o.report.result;
        compare_fields("degree f" + std::to_string(c.component), d, got, res.mismatches);
        digest("degree." + std::to_string(c.component), o);
      }
    }
    if (expect.contains("classify")) {
      Outcome o = run_classify(problem, config);
      compare_classify(expect["classify"], o, res.mismatches);
      digest("classify", o);
    }
  } catch (const std::exception& e) {
    res.mismatches.push_back(std::string("error: ") + e.what());
  }
  res.ok = res.mismatches.empty();
  return res;
}

std::vector<CorpusResult> run_corpus(const std::filesystem::path& dir, std::uint64_t seed) {
  std::vector<std::future<CorpusResult>> jobs;
  for (const auto& e : list_corpus(dir)) {
    jobs.push_back(std::async(std::launch::async, [e, seed] { return run_corpus_entry(e, seed); }));
  }
  std::vector<CorpusResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace milnorkit
