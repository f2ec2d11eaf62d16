#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hspex/errors.hpp"
#include "hspex/hypergraph.hpp"
#include "hspex/isomorphism.hpp"
#include "hspex/report.hpp"

using namespace hspex;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult res;
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/hspex_test_") + name;
}

}  // namespace

TEST_CASE("experiment registry names are unique and runnable") {
  auto names = experiment_names();
  CHECK(names.size() == 15);
  std::set<std::string> uniq(names.begin(), names.end());
  CHECK(uniq.size() == names.size());
  CHECK_THROWS_AS(run_experiment("no-such-experiment", 1), validation_error);
}

TEST_CASE("reports serialize deterministically at a fixed seed") {
  RunReport a = run_experiment("lagrangian-closed-forms", 2026);
  RunReport b = run_experiment("lagrangian-closed-forms", 2026);
  CHECK(a.all_pass());
  auto ja = nlohmann::json::parse(to_json(a));
  auto jb = nlohmann::json::parse(to_json(b));
  ja["wall_ms"] = 0;
  jb["wall_ms"] = 0;
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["schema"] == 1);
  CHECK(ja["experiment"] == "lagrangian-closed-forms");
  CHECK(ja["seed"] == 2026);
  CHECK(ja["pass"] == true);
  REQUIRE(ja["checks"].is_array());
  REQUIRE(!ja["checks"].empty());
  for (const auto& c : ja["checks"]) {
    CHECK(c.contains("claim"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("target"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
    std::string basis = c["basis"];
    CHECK((basis == "closed-form" || basis == "definition" || basis == "oracle"));
  }
}

TEST_CASE("markdown rendering carries the verdict and the table") {
  RunReport rep = run_experiment("scalar-inequalities", 2026);
  std::string md = to_markdown(rep);
  CHECK(md.find("# scalar-inequalities") != std::string::npos);
  CHECK(md.find("PASS") != std::string::npos);
  CHECK(md.find("| claim |") != std::string::npos);
}

TEST_CASE("default seed honours the environment variable") {
  unsetenv("HSPEX_SEED");
  CHECK(default_seed() == 2026u);
  setenv("HSPEX_SEED", "12345", 1);
  CHECK(default_seed() == 12345u);
  setenv("HSPEX_SEED", "notanumber", 1);
  CHECK(default_seed() == 2026u);
  unsetenv("HSPEX_SEED");
}

TEST_CASE("cli spectral exits zero and prints the radius") {
  CliResult res = run_cli("spectral --builtin K_3 --alpha 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("lambda") != std::string::npos);
  CHECK(res.out.find("2") != std::string::npos);
  CHECK(res.out.find("converged yes") != std::string::npos);
}

TEST_CASE("cli spectral json carries the schema and the vector") {
  CliResult res = run_cli("spectral --builtin edge:r=3 --alpha 1 --json");
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["schema"] == 1);
  CHECK(double(doc["lambda"]) == doctest::Approx(6.0 / 27.0).epsilon(1e-9));
  CHECK(doc["vector"].size() == 3);
}

TEST_CASE("cli rejects bad input with exit one") {
  std::string bad = temp_path("bad.hg");
  std::ofstream(bad) << "hg 3 2 1\n0 9\n";
  CHECK(run_cli("spectral --file " + bad + " --alpha 2").exit_code == 1);
  CHECK(run_cli("spectral --builtin K_3 --alpha 0.5").exit_code == 1);
  CHECK(run_cli("spectral --builtin no_such --alpha 2").exit_code == 1);
  CHECK(run_cli("spectral --alpha 2").exit_code == 1);
  CHECK(run_cli("verify no-such-experiment").exit_code == 1);
  std::remove(bad.c_str());
}

TEST_CASE("cli reports non-convergence with exit two") {
  CliResult res = run_cli("spectral --builtin path:n=4 --alpha 2 --max-iter 2 --restarts 1");
  CHECK(res.exit_code == 2);
  CHECK(res.out.find("converged no") != std::string::npos);
}

TEST_CASE("cli maps infeasible instances to exit three") {
  CHECK(run_cli("extremal --forbid K_3 --n 11 --alpha 2").exit_code == 3);
}

TEST_CASE("cli construct round-trips through the parser") {
  std::string path = temp_path("turan.hg");
  CHECK(run_cli("construct turan --n 6 --l 3 --r 2 --out " + path).exit_code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  Hypergraph parsed = parse_hypergraph(buf.str());
  CHECK(parsed.edge_count() == 12);
  Hypergraph expect = turan_hypergraph(6, 3, 2);
  CHECK(canonical_form(parsed).edges == canonical_form(expect).edges);
  CHECK(parsed.edges == expect.edges);  // construct emits the canonical layout
  std::remove(path.c_str());
}

TEST_CASE("cli construct round-trips every builtin family") {
  for (const std::string& spec :
       {std::string("complete --n 5 --r 3"), std::string("edge --r 4"),
        std::string("chromatic --n 6 --k 2 --r 3"), std::string("cycle --n 5"),
        std::string("path --n 4"), std::string("pair --r 3 --l 4")}) {
    std::string path = temp_path("builtin.hg");
    CHECK(run_cli("construct " + spec + " --out " + path).exit_code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    Hypergraph parsed = parse_hypergraph(buf.str());
    CHECK(parsed.n > 0);
    std::remove(path.c_str());
  }
}

TEST_CASE("cli sweep emits a csv with one row per grid point") {
  CliResult res = run_cli("sweep --builtin K_3 --alphas 1:4:4:lin");
  CHECK(res.exit_code == 0);
  std::stringstream ss(res.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "alpha,lambda,residual");
  int rows = 0;
  double prev = -1.0;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    ++rows;
    double lambda = std::stod(line.substr(line.find(',') + 1));
    CHECK(lambda >= prev - 1e-9);
    prev = lambda;
  }
  CHECK(rows == 4);
}

TEST_CASE("cli density prints the simplex value") {
  CliResult res = run_cli("density --pattern clique:l=3,r=2 --json");
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(double(doc["value"]) == doctest::Approx(2.0 / 3).epsilon(1e-8));
}

TEST_CASE("cli extremal dispatches on its flags") {
  CliResult ed = run_cli("extremal --forbid K_3 --n 5");
  CHECK(ed.exit_code == 0);
  CHECK(ed.out.find("edge optimum 6") != std::string::npos);

  CliResult sp = run_cli("extremal --forbid K_3 --n 5 --alpha 2");
  CHECK(sp.exit_code == 0);
  CHECK(sp.out.find("spectral optimum") != std::string::npos);

  CliResult col = run_cli("extremal --pattern clique:l=2,r=2 --n 6 --alpha 2");
  CHECK(col.exit_code == 0);
  CHECK(col.out.find("spectral optimum 3") != std::string::npos);

  CHECK(run_cli("extremal --n 5").exit_code == 1);
}

TEST_CASE("cli verify writes the json report on request") {
  std::string path = temp_path("verify.json");
  CliResult res = run_cli("verify lagrangian-closed-forms --json " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("PASS") != std::string::npos);
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["schema"] == 1);
  CHECK(doc["pass"] == true);
  std::remove(path.c_str());
}

TEST_CASE("cli verify respects the seed environment variable") {
  std::string p1 = temp_path("seed_a.json"), p2 = temp_path("seed_b.json");
  std::string env_cmd = std::string("HSPEX_SEED=99 ") + CLI_PATH +
                        " verify colorability-closure --json " + p1 + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
  CliResult direct = run_cli("verify colorability-closure --seed 99 --json " + p2);
  CHECK(direct.exit_code == 0);
  std::ifstream in1(p1), in2(p2);
  REQUIRE(in1.good());
  auto d1 = nlohmann::json::parse(in1);
  auto d2 = nlohmann::json::parse(in2);
  CHECK(d1["seed"] == 99);
  d1["wall_ms"] = 0;
  d2["wall_ms"] = 0;
  CHECK(d1.dump() == d2.dump());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}
