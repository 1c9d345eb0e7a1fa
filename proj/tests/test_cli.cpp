#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MILNOR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const std::string& name) { return std::string(MILNOR_CORPUS_DIR) + "/" + name + ".prob"; }

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

fs::path copy_corpus(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("milnorkit_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::copy(MILNOR_CORPUS_DIR, dir);
  return dir;
}

}  // namespace

TEST_CASE("verify exit codes") {
  auto ok = run("verify " + corpus("hopf"));
  CHECK(ok.exit == 0);
  CHECK(contains(ok.out, "holds         conformality"));

  auto bad = run("verify " + corpus("ex1_verbatim"));
  CHECK(bad.exit == 1);
  CHECK(contains(bad.out, "df2(X1) = -6*x1^2*x3*x4 - 6*x2^2*x3*x4"));

  CHECK(run("verify missing.prob").exit == 2);
  CHECK(run("verify " + corpus("hopf") + " --checks nonsense").exit == 2);
  CHECK(run("verify " + corpus("hopf") + " --format xml").exit == 2);
  CHECK(run("").exit == 2);
}

TEST_CASE("selected check groups") {
  auto r = run("verify " + corpus("ex1_verbatim") + " --checks laplacian --format machine");
  CHECK(r.exit == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["checks"].size() == 2);
  CHECK(j["config"]["checks"] == nlohmann::json::array({"laplacian"}));
}

TEST_CASE("degree command") {
  auto r = run("degree " + corpus("cubic_r4") + " --component 1 --format machine");
  CHECK(r.exit == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["milnor_number"] == 16);
  CHECK(j["result"]["degree"] == 4);
  CHECK(j["config"]["seed"] == 0x5EED);

  auto h = nlohmann::json::parse(run("degree " + corpus("hopf") + " --format machine").out);
  CHECK(h["result"]["milnor_number"] == 1);
  CHECK(h["result"]["degree"] == 1);

  auto inf = run("degree " + corpus("dimsing_r4") + " --format machine");
  CHECK(inf.exit == 0);
  CHECK(nlohmann::json::parse(inf.out)["result"]["milnor_number"] == "infinite");

  CHECK(run("degree " + corpus("hopf") + " --component 3").exit == 2);
  auto seeded = nlohmann::json::parse(run("degree " + corpus("hopf") + " --seed 7 --format machine").out);
  CHECK(seeded["config"]["seed"] == 7);
}

TEST_CASE("classify command") {
  auto r = run("classify " + corpus("hopf"));
  CHECK(r.exit == 0);
  CHECK(contains(r.out, "quadratic_pencil: applies"));
  CHECK(contains(r.out, "chi(M_p) = 1 - deg_0 grad f1 = 1 - (1) = 0"));

  auto c = run("classify " + corpus("cubic_r4"));
  CHECK(contains(c.out, "deg_0 grad f1 = 4 != 0 excludes condition (1)"));

  auto e = run("classify " + corpus("r8_to_r3"));
  CHECK(contains(e.out, "minimal_fibers: applies"));

  auto plain = run("classify " + corpus("hopf_s3_s2") + " --assert simply_connected");
  CHECK(plain.exit == 0);
  CHECK(contains(plain.out, "simply_connected"));
  CHECK(run("classify " + corpus("hopf") + " --assert flying").exit == 2);
}

TEST_CASE("machine reports are deterministic") {
  auto a = run("classify " + corpus("quaternionic") + " --format machine");
  auto b = run("classify " + corpus("quaternionic") + " --format machine");
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("corpus list and run-all") {
  auto l = run("corpus list");
  CHECK(l.exit == 0);
  CHECK(std::count(l.out.begin(), l.out.end(), '\n') >= 10);
  for (const char* name : {"ex1_verbatim", "r3_line_field", "r8_cubic_pair", "dimsing_r4", "hopf",
                           "cubic_conformal_r4", "cubic_r4", "quintic_r4", "r8_to_r3", "quaternionic"}) {
    CHECK_MESSAGE(contains(l.out, std::string(name) + "  "), name);
  }
  auto r = run("corpus run-all --format machine");
  CHECK(r.exit == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["failed"] == 0);
}

TEST_CASE("corrupted expectations fail the corpus") {
  fs::path dir = copy_corpus("corrupt");
  {
    std::ifstream in(dir / "cubic_r4.expect");
    auto j = nlohmann::json::parse(in);
    j["degree"][0]["degree"] = 3;
    std::ofstream(dir / "cubic_r4.expect") << j.dump(2);
  }
  auto r = run("corpus --corpus-dir " + dir.string() + " run-all");
  CHECK(r.exit == 1);
  CHECK(contains(r.out, "MISMATCH  cubic_r4"));
  CHECK(contains(r.out, "degree = 4, expected 3"));

  std::ofstream(dir / "hopf.expect") << "{ not json";
  auto broken = run("corpus --corpus-dir " + dir.string() + " run-all");
  CHECK(broken.exit == 1);
  CHECK(contains(broken.out, "MISMATCH  hopf"));
  fs::remove_all(dir);

  CHECK(run("corpus --corpus-dir /nonexistent run-all").exit == 2);
}
