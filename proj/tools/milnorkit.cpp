#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "milnorkit/error.hpp"
#include "milnorkit/pipeline.hpp"

using namespace milnorkit;

namespace {

std::set<std::string> split_commas(const std::string& s) {
  std::set<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"milnorkit: exact checks and theorem engine for harmonic first integral maps"};
  app.require_subcommand(1);

  std::string format = "human";
  std::uint64_t seed = 0x5EED;
  std::string checks;
  std::vector<std::string> assertions;
  std::string path;
  std::size_t component = 1;
  std::string corpus_dir = MILNOR_CORPUS_DIR;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--seed", seed, "seed for the random functional and oracles");
  };
  auto* verify = app.add_subcommand("verify", "first-integral, Frobenius, involutivity and harmonicity checks");
  verify->add_option("problem", path, "problem file")->required();
  verify->add_option("--checks", checks, "comma list of check groups");
  add_common(verify);

  auto* degree = app.add_subcommand("degree", "Milnor number and local degree of grad f_k");
  degree->add_option("problem", path, "problem file")->required();
  degree->add_option("--component", component, "component k (1-based)");
  add_common(degree);

  auto* cls = app.add_subcommand("classify", "apply the theorem engine");
  cls->add_option("problem", path, "problem file")->required();
  cls->add_option("--assert", assertions, "inject a user assertion flag");
  add_common(cls);

  auto* corpus = app.add_subcommand("corpus", "bundled example corpus");
  corpus->require_subcommand(1);
  corpus->add_option("--corpus-dir", corpus_dir, "corpus directory");
  auto* list = corpus->add_subcommand("list", "list entries");
  auto* run_all = corpus->add_subcommand("run-all", "run every entry against its expectations");
  add_common(run_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::input_error;
  }
  const ReportFormat fmt = format == "machine" ? ReportFormat::machine : ReportFormat::human;

  try {
    if (corpus->parsed()) {
      if (list->parsed()) {
        for (const auto& e : list_corpus(corpus_dir)) {
          ProblemSpec p = load_problem(e.problem);
          std::cout << e.name << "  " << p.description << "\n";
        }
        return exit_code::ok;
      }
      (void)run_all;
      auto results = run_corpus(corpus_dir, seed);
      std::size_t failed = 0;
      Json machine = Json::array();
      for (const auto& r : results) {
        if (!r.ok) ++failed;
        if (fmt == ReportFormat::machine) {
          Json e;
          e["name"] = r.name;
          e["status"] = r.ok ? "ok" : "mismatch";
          e["mismatches"] = r.mismatches;
          e["reports"] = Json::object();
          for (const auto& [cmd, d] : r.digests) e["reports"][cmd] = "sha256:" + d;
          machine.push_back(std::move(e));
        } else {
          std::cout << (r.ok ? "ok        " : "MISMATCH  ") << r.name << "\n";
          for (const auto& m : r.mismatches) std::cout << "          " << m << "\n";
        }
      }
      if (fmt == ReportFormat::machine) {
        Json doc;
        doc["entries"] = machine;
        doc["passed"] = results.size() - failed;
        doc["failed"] = failed;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << results.size() - failed << "/" << results.size() << " entries match\n";
      }
      return failed == 0 ? exit_code::ok : exit_code::check_failed;
    }

    ProblemSpec problem = load_problem(path);
    RunConfig config;
    config.seed = seed;
    config.checks = split_commas(checks);
    config.component = component;
    config.assertions = assertions;
    Outcome o;
    if (verify->parsed()) {
      o = run_verify(problem, config);
    } else if (degree->parsed()) {
      o = run_degree(problem, config);
    } else {
      o = run_classify(problem, config);
    }
    o.report.source = path;
    std::cout << emit_report(o.report, fmt);
    return o.exit;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code::alarm;
  }
}
