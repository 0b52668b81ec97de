#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// env prefix goes before the binary, args after
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env;
  if (!cmd.empty()) cmd += " ";
  cmd += "\"" GOSSET_CLI_PATH "\" " + args + " > cli_out.txt 2> cli_err.txt";
  int status = std::system(cmd.c_str());
  RunResult r;
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp("cli_out.txt");
  r.err = slurp("cli_err.txt");
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("radii command") {
  auto r = run_cli("radii E8");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "h = 30"));
  CHECK(contains(r.out, "209.056927"));
  CHECK(contains(r.out, "1000.000000"));

  auto a2 = run_cli("radii A2 --format json");
  REQUIRE(a2.code == 0);
  auto j = nlohmann::json::parse(a2.out);
  CHECK(j["type"] == "A2");
  CHECK(j["h"] == 3);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["eigenvalue_a"] == "1/2");
  CHECK(j["rows"][1]["normalized"] == 1000.0);
  CHECK(j["rows"][0]["multiplicity"] == 2);
  CHECK(j["rows"][1]["multiplicity"] == 2);

  auto csv = run_cli("radii B2 --format csv");
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "eigenvalue_a,radius,normalized,integer_part,multiplicity"));
}

TEST_CASE("inadmissible or malformed types exit 2") {
  CHECK(run_cli("radii D3").code == 2);
  CHECK(run_cli("radii X9").code == 2);
  CHECK(run_cli("radii A1").code == 2);
  CHECK(run_cli("verify E9").code == 2);
  CHECK(run_cli("project D2 --out pd2.svg").code == 2);
}

TEST_CASE("verify command and tolerance plumbing") {
  auto r = run_cli("verify G2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[PASS]"));
  CHECK_FALSE(contains(r.out, "[FAIL]"));
  CHECK(contains(r.out, "max relative discrepancy"));
  // timings stay off stdout so output is comparable run to run
  CHECK_FALSE(contains(r.out, " ms"));
  CHECK(contains(r.err, " ms"));

  CHECK(run_cli("verify B2 --tolerance=1e-300").code == 1);
  CHECK(run_cli("verify A2 --tolerance=0.5").code == 2);
  CHECK(run_cli("verify A2 --tolerance=-1e-9").code == 2);
  CHECK(run_cli("verify").code == 2);  // no type, no --all

  CHECK(run_cli("verify A2", "GOSSET_TOLERANCE=bogus").code == 2);
  CHECK(run_cli("verify A2", "GOSSET_TOLERANCE=1e-300").code == 1);
  CHECK(run_cli("verify A2 --tolerance=1e-8", "GOSSET_TOLERANCE=1e-300").code == 0);

  auto sweep = run_cli("verify --all");
  CHECK(sweep.code == 0);
  CHECK(contains(sweep.out, "E8: PASS"));
  CHECK_FALSE(contains(sweep.out, "FAIL"));
}

TEST_CASE("project command") {
  CHECK(run_cli("project A2").code == 2);  // output path is required
  CHECK(run_cli("project A2 --out /nonexistent_dir_zz/f.svg").code == 3);

  auto ok = run_cli("project A2 --out proj_a2.svg");
  CHECK(ok.code == 0);
  std::string svg = slurp("proj_a2.svg");
  CHECK(svg.rfind("<svg", 0) == 0);

  CHECK(run_cli("project A2 --exponent 2 --out proj_a2e2.svg").code == 0);
  CHECK(run_cli("project B2 --exponent 2 --out proj_b2e2.svg").code == 2);
  CHECK(run_cli("project A2 --edges wrong --out x.svg").code == 2);
}

TEST_CASE("E8 projection is byte deterministic") {
  REQUIRE(run_cli("project E8 --edges polytope --out e8_a.svg").code == 0);
  REQUIRE(run_cli("project E8 --edges polytope --out e8_b.svg").code == 0);
  std::string a = slurp("e8_a.svg");
  std::string b = slurp("e8_b.svg");
  CHECK(!a.empty());
  CHECK(a == b);

  auto csv = run_cli("project E8 --format csv --out e8.csv");
  REQUIRE(csv.code == 0);
  std::ifstream in("e8.csv");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 241);  // header plus one row per root
}

TEST_CASE("charpoly command") {
  auto r = run_cli("charpoly E8");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "factorization verified: yes"));
  CHECK(contains(r.out, "-15"));

  auto a2 = run_cli("charpoly A2");
  CHECK(a2.code == 0);
  CHECK(contains(a2.out, "1/4"));
}

TEST_CASE("masses command") {
  CHECK(run_cli("masses A2").code == 2);  // defined for E8 only

  auto r = run_cli("masses E8");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "x R"));
  CHECK(contains(r.out, "->"));
  CHECK(contains(r.out, "1000"));
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate E8").code == 2);
  CHECK(run_cli("radii E8 --format yaml").code == 2);
  CHECK(run_cli("--help").code == 0);
}
