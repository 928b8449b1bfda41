#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

const char* cli_path() { return QGW_CLI_PATH; }

int run(const std::string& args) {
  std::string cmd = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string tmp_file(const char* name) {
  return std::string("cli_test_") + name + ".json";
}

}  // namespace

TEST_CASE("help exits 0, usage errors exit 2") {
  CHECK(run("--help") == 0);
  CHECK(run("check --help") == 0);
  CHECK(run("") == 2);
  CHECK(run("check") == 2);
  CHECK(run("report --series X --rank 1") == 2);
  CHECK(run("check nosuchcheck --series A --rank 1") == 2);
  CHECK(run("check freeness --series B --rank 1") == 2);
}

TEST_CASE("single checks pass with exit 0 and write valid reports") {
  std::string out = tmp_file("qybe");
  CHECK(run("check qybe --series A --rank 1 --out " + out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["tool"] == "qgw");
  CHECK(j["checks"]["qybe"]["qybe"] == "pass");
  CHECK(j["pass"] == true);
  CHECK(j["config"]["series"] == "A");
  CHECK(j.contains("convention_ledger_hash"));
  std::remove(out.c_str());
}

TEST_CASE("flatness check reports the expected dimension table") {
  std::string out = tmp_file("flat");
  CHECK(run("check flatness --series A --rank 1 --algebra re --model free "
            "--max-degree 4 --out " + out) == 0);
  auto j = nlohmann::json::parse(slurp(out));
  auto dims = j["checks"]["flatness"]["quantum_dims"];
  CHECK(dims == nlohmann::json({1, 4, 10, 20, 35}));
  std::remove(out.c_str());
}

TEST_CASE("full report for series A rank 1 passes and is byte-deterministic") {
  std::string o1 = tmp_file("rep1"), o2 = tmp_file("rep2");
  CHECK(run("report --series A --rank 1 --out " + o1) == 0);
  CHECK(run("report --series A --rank 1 --out " + o2) == 0);
  std::string s1 = slurp(o1), s2 = slurp(o2);
  CHECK(!s1.empty());
  CHECK(s1 == s2);
  auto j = nlohmann::json::parse(s1);
  CHECK(j["pass"] == true);
  for (auto& [name, body] : j["checks"].items()) CHECK(body["pass"] == true);
  // no timing or timestamps leak into the file
  CHECK(s1.find("time") == std::string::npos);
  CHECK(s1.find("date") == std::string::npos);
  std::remove(o1.c_str());
  std::remove(o2.c_str());
}

TEST_CASE("seeded metric-series reports are deterministic under a fixed seed") {
  std::string o1 = tmp_file("b1"), o2 = tmp_file("b2");
  CHECK(run("check jacobi --series B --rank 1 --algebra re --seed 7 --out " + o1) == 0);
  CHECK(run("check jacobi --series B --rank 1 --algebra re --seed 7 --out " + o2) == 0);
  CHECK(slurp(o1) == slurp(o2));
  auto j = nlohmann::json::parse(slurp(o1));
  CHECK(j["checks"]["jacobi"]["points_checked"] >= 20);
  CHECK(j["checks"]["jacobi"]["on_variety"] == true);
  std::remove(o1.c_str());
  std::remove(o2.c_str());
}
