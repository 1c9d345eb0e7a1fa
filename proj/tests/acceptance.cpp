#include <sys/wait.h>

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "milnorkit/classify.hpp"
#include "milnorkit/expr.hpp"
#include "milnorkit/groebner.hpp"
#include "milnorkit/harmonic.hpp"
#include "milnorkit/local_degree.hpp"
#include "milnorkit/pipeline.hpp"
#include "oracles.hpp"

using namespace milnorkit;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> lines;

  void expect(bool ok, const std::string& what) {
    if (!ok) pass = false;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

ProblemSpec problem(const std::string& name) {
  return load_problem(std::string(MILNOR_CORPUS_DIR) + "/" + name + ".prob");
}

struct Shell {
  int exit;
  std::string out;
};

Shell shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

FactCollection facts_of(const ProblemSpec& p) {
  FactOptions o;
  o.assertions = p.assertions;
  return collect_facts(p.primary_map().value, o);
}

std::string chi_from_topology(int genus, int discs) { return std::to_string(2 - 2 * genus - discs); }

Verdict identities() {
  Verdict o;
  struct Case {
    const char* name;
    const char* closed_form;
  };
  const std::vector<Case> cases = {
      {"hopf", nullptr},
      {"cubic_conformal_r4", "(a^2 + b^2)*(a^2 + b^2 + 4*x^2 + 4*y^2)"},
      {"dimsing_r4", "(x^2 + y^2)*(w^2 + z^2)^2*(4*w^2 + 9*x^2 + 9*y^2 + 4*z^2)"},
      {"cubic_r4", "9*u^4 + 18*u^2*z^2 + 9*x^4 + 18*x^2*y^2 + 9*y^4 + 9*z^4"},
      {"quintic_r4", "25*u^8 + 100*u^6*z^2 + 150*u^4*z^4 + 100*u^2*z^6 + 25*z^8 + 4*x^2 + 4*y^2"},
      {"r8_to_r3", "36*(a^2 + b^2 + c^2 + d^2) + 16*(w^2 + x^2 + y^2 + z^2)"},
      {"quaternionic", "a^2 + b^2 + c^2 + d^2 + w^2 + x^2 + y^2 + z^2"},
  };
  for (const auto& c : cases) {
    auto p = problem(c.name);
    const PolyMap& f = p.primary_map().value;
    bool laplace = true;
    for (const auto& g : f.components()) laplace = laplace && laplacian(g).is_zero();
    GramResult g = gram(f);
    bool closed = c.closed_form == nullptr ||
                  (g.lambda_sq && *g.lambda_sq == parse_polynomial(c.closed_form, f.context()));
    o.expect(laplace, std::string(c.name) + ": all Laplacians vanish");
    o.expect(g.hwc, std::string(c.name) + ": Gram matrix is lambda^2 I");
    if (c.closed_form) o.expect(closed, std::string(c.name) + ": lambda^2 = " + c.closed_form);
  }
  return o;
}

Verdict sing_dimension() {
  Verdict o;
  auto p = problem("r8_cubic_pair");
  auto s = singular_ideal(p.primary_map().value);
  int complex_dim = ideal_dimension(buchberger(s.minors));
  RealRefinement r = real_refinement(s.minors);
  o.expect(r.linear && r.dimension == 2,
           "r8_cubic_pair: real Sing F is a linear subspace of dimension " + std::to_string(r.dimension) +
               " (complex Krull dimension " + std::to_string(complex_dim) + ")");
  auto facts = facts_of(p);
  const Fact* fact = facts.facts.get("sing_dimension");
  o.expect(fact && fact->value["real"] == 2, "r8_cubic_pair: sing_dimension fact reports real dimension 2");
  return o;
}

Verdict degrees() {
  Verdict o;
  auto c2 = VariableContext::make({"x", "y"});
  auto c4 = VariableContext::make({"x", "y", "z", "w"});

  auto hopf = analyze_degree(parse_polynomial("x^2 + y^2 - z^2 - w^2", c4));
  o.expect(hopf.el.kind == ElDegree::Kind::defined && hopf.el.degree == 1, "Hopf quadric: deg_0 grad f = 1");

  auto z3 = analyze_degree(parse_polynomial("x^3 - 3*x*y^2", c2));
  o.expect(z3.el.degree == -2, "x^3 - 3xy^2: EL degree = " + std::to_string(z3.el.degree));
  o.expect(z3.winding && z3.winding->degree == -2 && z3.winding_agreement == "agree",
           "x^3 - 3xy^2: winding oracle agrees");

  for (const char* name : {"cubic_r4", "quintic_r4"}) {
    auto p = problem(name);
    auto d = el_degree(p.primary_map().value[0]);
    o.expect(d.kind == ElDegree::Kind::defined && d.degree == 4,
             std::string(name) + ": deg_0 grad f1 = " + std::to_string(d.degree));
  }

  struct Chi {
    const char* name;
    std::string expected;
  };
  for (const Chi& c : {Chi{"hopf", "0"}, Chi{"cubic_r4", chi_from_topology(1, 3)},
                       Chi{"quintic_r4", chi_from_topology(2, 1)}}) {
    auto facts = facts_of(problem(c.name));
    auto r = classify(facts.facts);
    const auto* t = r.find("euler_characteristic");
    std::string chi = t && t->payload.contains("chi") ? t->payload["chi"].dump() : "?";
    o.expect(t && t->applies() && chi == c.expected,
             std::string(c.name) + ": chi(M_p) = " + chi + ", expected " + c.expected);
  }
  return o;
}

Verdict milnor_numbers() {
  Verdict o;
  auto c2 = VariableContext::make({"x", "y"});
  auto c4 = VariableContext::make({"x", "y", "z", "w"});
  struct Case {
    const char* label;
    Polynomial f;
    std::size_t expected;
  };
  auto cubic = problem("cubic_r4").primary_map().value[0];
  const std::vector<Case> cases = {
      {"Hopf quadric", parse_polynomial("x^2 + y^2 - z^2 - w^2", c4), 1},
      {"x^3 - 3xy^2", parse_polynomial("x^3 - 3*x*y^2", c2), 4},
      {"cubic f1", cubic, 16},
  };
  for (const auto& c : cases) {
    MilnorNumber m = milnor_number(c.f);
    std::size_t oracle = oracles::graded_quotient_dimension(jacobian_ideal(c.f));
    o.expect(m.kind == MilnorNumber::Kind::finite && m.value == c.expected && oracle == c.expected,
             std::string(c.label) + ": mu = " + std::to_string(m.value) + ", rank oracle " +
                 std::to_string(oracle) + ", expected " + std::to_string(c.expected));
  }
  return o;
}

Verdict verdicts() {
  Verdict o;
  {
    auto f = facts_of(problem("hopf"));
    auto r = classify(f.facts);
    const auto* t = r.find("quadratic_pencil");
    o.expect(f.facts.status("isolated_singularity") == Status::holds, "Hopf: Sing F = {0}");
    o.expect(t && t->applies() && t->payload["fiber"] == "S^1", "Hopf: quadratic pencil theorem applies, fiber S^1");
  }
  {
    auto r = classify(facts_of(problem("r8_to_r3")).facts);
    const auto* t = r.find("minimal_fibers");
    o.expect(t && t->applies(), "r8_to_r3: minimal fibers theorem applies");
  }
  {
    auto r = classify(facts_of(problem("cubic_r4")).facts);
    const auto* t = r.find("ball_inclusion");
    bool reason = false;
    if (t) {
      for (const auto& n : t->notes) reason = reason || n.find("deg_0 grad f1 = 4 != 0") != std::string::npos;
    }
    o.expect(t && !t->applies() && reason, "cubic_r4: no ball inclusion, deg_0 grad f1 = 4 != 0");
  }
  for (const char* name : {"r8_to_r3", "quaternionic"}) {
    auto f = facts_of(problem(name));
    auto r = classify(f.facts);
    const auto* t = r.find("hopf_fiber");
    const Fact* z = f.facts.get("origin_only");
    bool witness = z && z->status == Status::fails && z->value.contains("witness");
    o.expect(t && t->applicability == "fails hypothesis: V_F = {0}" && witness,
             std::string(name) + ": Hopf fibre proposition inapplicable, nonzero zero " +
                 (witness ? z->value["witness"].get<std::string>() : "missing"));
  }
  return o;
}

Verdict negatives() {
  Verdict o;
  struct Case {
    const char* name;
    const char* check;
    const char* witness;
  };
  const std::vector<Case> cases = {
      {"ex1_verbatim", "first_integral[f2, X1]", "df2(X1) = -6*x1^2*x3*x4 - 6*x2^2*x3*x4"},
      {"ex1_verbatim", "first_integral[f2, X2]", "df2(X2) = 2*x3*x4^3 - 2*x3*x4^2"},
      {"ex1_verbatim", "laplacian[f2]", "Laplacian f2 = 12*x2 + 4"},
      {"cubic_conformal_r4", "exact_form[w2 ~ df2]", "w2 - df2 = (-4*x*b)*da"},
  };
  for (const auto& c : cases) {
    auto out = run_verify(problem(c.name), RunConfig{});
    bool found = false;
    for (const auto& e : out.report.checks) {
      if (e.name != c.check) continue;
      found = e.status == Status::fails && !e.witness.empty() && e.witness[0] == c.witness;
    }
    o.expect(out.exit == exit_code::check_failed && found, std::string(c.name) + ": " + c.witness);
  }
  for (const auto& entry : list_corpus(MILNOR_CORPUS_DIR)) {
    if (entry.name != "ex1_verbatim" && entry.name != "cubic_conformal_r4") continue;
    auto r = run_corpus_entry(entry, 0x5EED);
    o.expect(r.ok, entry.name + ": residuals match the expectation file");
  }
  return o;
}

Verdict properties() {
  Verdict o;
  auto r = shell(std::string(MILNOR_PROPERTIES) + " --minimal");
  o.expect(r.exit == 0, "property suites pass (" + std::string(MILNOR_PROPERTIES) + ")");
  return o;
}

Verdict determinism() {
  Verdict o;
  std::string cmd = std::string(MILNOR_CLI) + " corpus --corpus-dir " + MILNOR_CORPUS_DIR + " run-all --format machine";
  auto a = shell(cmd), b = shell(cmd);
  o.expect(a.exit == 0 && b.exit == 0, "corpus run-all exits 0 twice");
  o.expect(!a.out.empty() && a.out == b.out,
           "machine outputs are byte-identical (" + std::to_string(a.out.size()) + " bytes)");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"exact harmonic morphism identities", identities},
      {"dim Sing F = 2 for the R^8 pair", sing_dimension},
      {"local degrees and Euler characteristics", degrees},
      {"Milnor numbers", milnor_numbers},
      {"theorem verdicts", verdicts},
      {"negative corpus residuals", negatives},
      {"randomized property suites", properties},
      {"deterministic corpus reports", determinism},
  };
  bool all = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
    for (const auto& l : o.lines) detail << "  [" << i + 1 << "] " << l << "\n";
  }
  std::cout << "\n" << detail.str();
  return all ? 0 : 1;
}
