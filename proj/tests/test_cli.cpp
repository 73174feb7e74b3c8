#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string fx(const char* name) {
  return std::string(ORBISECT_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return std::move(out).str();
}

struct RunResult {
  int code = -1;
  std::string out, err;
};

// Runs the binary through the shell; `env` is an optional VAR=value prefix.
RunResult run(const std::string& args, const std::string& env = "") {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" ORBISECT_CLI_PATH "\" " + args +
                    " > " + out_path + " 2> " + err_path;
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string football_args() {
  return "--space \"" + fx("football.json") + "\" --group \"" + fx("z3.json") + "\"";
}

std::string cone_args() {
  return "--space \"" + fx("s3model.json") + "\" --group \"" + fx("s3.json") + "\"";
}

}  // namespace

TEST_CASE("sector decomposition on stdout") {
  auto r = run("sectors " + football_args() + " --gamma Z --refine");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("tool") == "orbisect");
  CHECK(j.at("report") == "sectors");
  CHECK(j.at("gamma") == "Z");
  CHECK(j.at("coarse").size() == 3);
  CHECK(j.at("refined").size() == 5);
  CHECK(j.at("inputs").at("space").at("path") == fx("football.json"));
  CHECK(j.at("inputs").at("gamma").at("sha256").get<std::string>().size() == 64);

  // Without the flag the refined block is absent.
  auto r2 = run("sectors " + football_args() + " --gamma Z");
  CHECK_FALSE(json::parse(r2.out).contains("refined"));
}

TEST_CASE("reports are byte-stable across runs") {
  auto args = "sectors " + football_args() + " --gamma Z2 --refine --out cli_rep_a.json";
  auto args2 = "sectors " + football_args() + " --gamma Z2 --refine --out cli_rep_b.json";
  REQUIRE(run(args).code == 0);
  REQUIRE(run(args2).code == 0);
  auto a = slurp("cli_rep_a.json");
  auto b = slurp("cli_rep_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(json::parse(a).at("refined").size() == 17);
  std::remove("cli_rep_a.json");
  std::remove("cli_rep_b.json");
}

TEST_CASE("single-loop entry points emit identical bytes") {
  REQUIRE(run("inertia " + football_args() + " --refine --out cli_in.json").code == 0);
  REQUIRE(run("multisector " + football_args() + " -k 1 --refine --out cli_mu.json").code == 0);
  auto a = slurp("cli_in.json");
  auto b = slurp("cli_mu.json");
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(json::parse(a).at("gamma") == "Z");
  std::remove("cli_in.json");
  std::remove("cli_mu.json");

  REQUIRE(run("inertia " + cone_args() + " --out cli_in2.json").code == 0);
  REQUIRE(run("multisector " + cone_args() + " -k 1 --out cli_mu2.json").code == 0);
  CHECK(slurp("cli_in2.json") == slurp("cli_mu2.json"));
  std::remove("cli_in2.json");
  std::remove("cli_mu2.json");
}

TEST_CASE("summary goes to stdout while the report goes to the file") {
  auto r = run("sectors " + football_args() + " --gamma Z --summary --out cli_sum.json");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("coarse 3") != std::string::npos);
  CHECK(r.out.find("{") == std::string::npos);
  CHECK(json::parse(slurp("cli_sum.json")).at("report") == "sectors");
  std::remove("cli_sum.json");
}

TEST_CASE("euler command") {
  auto r = run("euler " + football_args() + " --gamma Z");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("sector_sum") == 6);
  CHECK(j.at("oracle") == "6");
  CHECK(j.at("agree") == true);
  CHECK(j.at("diagnostics").at("orbifold_total") == "2/3");

  auto rc = run("euler " + cone_args() + " --gamma Z2");
  REQUIRE(rc.code == 0);
  auto jc = json::parse(rc.out);
  CHECK(jc.at("sector_sum") == 17);
  CHECK(jc.at("oracle") == "17");
}

TEST_CASE("fixed-point sectors and covers") {
  auto r = run("leida " + cone_args() + " --gamma Z");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("sectors").size() == 4);
  CHECK(j.at("covering")[2].at("index") == 2);

  auto rf = run("leida " + football_args() + " --gamma Z");
  auto jf = json::parse(rf.out);
  CHECK(jf.at("sectors").size() == 2);
  for (const auto& row : jf.at("covering")) CHECK(row.at("index") == 1);

  auto rc = run("covers " + cone_args() + " --gamma Z");
  REQUIRE(rc.code == 0);  // a negative answer is still a clean report
  CHECK(json::parse(rc.out).at("covers") == false);
  auto rc2 = run("covers " + cone_args() + " --gamma F2");
  CHECK(json::parse(rc2.out).at("covers") == true);
}

TEST_CASE("verification subcommands pass on the bundled instances") {
  for (const char* gamma : {"Z", "Z2", "F2"}) {
    auto r = run("verify thm31 " + football_args() + " --gamma " + gamma);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("ok") == true);
    auto r2 = run("verify lem23 " + cone_args() + " --gamma " + gamma);
    REQUIRE(r2.code == 0);
    CHECK(json::parse(r2.out).at("ok") == true);
  }

  auto rm = run("verify multik " + football_args() + " -k 2");
  REQUIRE(rm.code == 0);
  auto jm = json::parse(rm.out);
  CHECK(jm.at("check") == "multik");
  CHECK(jm.at("counts").at("objects_by_stabilizers") == 21);

  auto rk = run("verify constants " + cone_args() + " -k 2 --relators commuting");
  REQUIRE(rk.code == 0);
  CHECK(json::parse(rk.out).at("ok") == true);
  auto rkf = run("verify constants " + football_args() + " -k 2 --relators free");
  REQUIRE(rkf.code == 0);
  CHECK(json::parse(rkf.out).at("ok") == true);
}

TEST_CASE("gamma can come from a presentation file") {
  auto r = run("sectors " + football_args() + " --gamma \"" + fx("zk2.json") + "\"");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("gamma") == "Z^2");
  CHECK(j.at("inputs").at("gamma").at("path") == fx("zk2.json"));
  CHECK(j.at("coarse").size() == 9);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("sectors --space missing.json --group \"" + fx("z3.json") + "\"").code == 2);
  CHECK(run("sectors " + football_args()).code == 0);
  CHECK(run("sectors --group \"" + fx("z3.json") + "\"").code == 2);  // --space required
  CHECK(run("nonsense").code == 2);
  CHECK(run("verify constants " + football_args() + " -k 2 --relators weird").code == 2);
  CHECK(run("sectors " + football_args() + " --gamma Q9").code == 2);

  auto r = run("sectors --space \"" + fx("z3.json") + "\" --group \"" + fx("z3.json") + "\"");
  CHECK(r.code == 2);  // a group file is not a complex
  CHECK(r.err.find("input error") != std::string::npos);
}

TEST_CASE("budget capacity exits with code 3 and the flag overrides the env") {
  auto r = run("sectors " + cone_args() + " --gamma Z2 --budget 30");
  CHECK(r.code == 3);
  CHECK(r.err.find("capacity") != std::string::npos);

  CHECK(run("sectors " + cone_args() + " --gamma Z2", "ORBISECT_BUDGET=30").code == 3);
  CHECK(run("sectors " + cone_args() + " --gamma Z2 --budget 100", "ORBISECT_BUDGET=30").code ==
        0);
  CHECK(run("sectors " + cone_args() + " --gamma Z2", "ORBISECT_BUDGET=banana").code == 2);
  CHECK(run("sectors " + cone_args() + " --gamma Z2 --budget 0").code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").code == 0);
  CHECK(run("sectors --help").code == 0);
  CHECK(run("verify --help").code == 0);
}

TEST_CASE("non-admissible input is subdivided and reported") {
  auto r = run("sectors --space \"" + fx("edge_swap.json") + "\" --group \"" + fx("z2.json") +
               "\" --gamma Z --refine");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("diagnostics").at("subdivisions") == 1);
  CHECK(j.at("coarse").size() == 2);
}
