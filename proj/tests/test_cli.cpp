#include "fixture_util.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

using namespace hstrace;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hstrace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string path(const std::string& name) { return std::string(HSTRACE_FIXTURE_DIR) + "/" + name + ".quiver"; }

}  // namespace

TEST_CASE("info reports dimensions, HH0 and loops") {
  Run r = run({"--json", "info", path("a2")});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["command"] == "info");
  CHECK(j["algebra"]["dim"] == 3);
  CHECK(j["algebra"]["loewy_length"] == 2);
  CHECK(j["algebra"]["hh0_dim"] == 2);
  CHECK(j["algebra"]["loops"] == nlohmann::json::array({0, 0}));
  CHECK(run({"--json", "info", path("loop")}).json()["algebra"]["loops"] == nlohmann::json::array({1}));

  Run text = run({"info", path("square")});
  CHECK(text.out.find("dim 9") != std::string::npos);
  CHECK(text.out.find("radical layers [4,4,1]") != std::string::npos);
}

TEST_CASE("pd, ext and trace") {
  CHECK(run({"--json", "pd", path("a2"), "--module", "simple:1"}).json()["result"]["pd"] == "Finite(1)");
  CHECK(run({"--json", "pd", path("loop"), "--module", "simple:1", "--bound", "7"}).json()["result"]["pd"] ==
        "AtLeast(7)");
  CHECK(run({"--json", "ext", path("loop"), "1", "1", "--degree", "3"}).json()["result"]["ext"] == 1);
  CHECK(run({"--json", "ext", path("twoloop"), "1", "1", "--degree", "3"}).json()["result"]["ext"] == 8);
  auto t = run({"--json", "trace", path("loop"), "--endo", "l:x"}).json()["result"];
  CHECK(t["trace"] == nlohmann::json::array({"0", "1"}));
  CHECK(t["hh0_basis"] == nlohmann::json::array({"1", "x"}));
  auto m = run({"--json", "trace", path("loop"), "--endo", "[1 + 2 x]"}).json()["result"];
  CHECK(m["trace"] == nlohmann::json::array({"1", "2"}));
  auto e1 = run({"--json", "trace", path("a2"), "--endo", "[1]", "--on", "proj:1"}).json()["result"];
  CHECK(e1["trace"] == nlohmann::json::array({"1", "0"}));
  // the arrow a sits in e1 A e2, not in the corner e1 A e1
  CHECK(run({"trace", path("a2"), "--endo", "[a]", "--on", "proj:1"}).code == 2);
}

TEST_CASE("character of complexes given inline") {
  auto contractible = run({"--json", "character", path("a2"), "--complex", "0: 1 | 1 ; d: [1]"}).json()["result"];
  CHECK(contractible["character"] == nlohmann::json::array({"0", "0"}));
  auto stalk = run({"--json", "character", path("a2"), "--complex", "0: 1,2"}).json()["result"];
  CHECK(stalk["character"] == nlohmann::json::array({"1", "1"}));
  auto res = run({"--json", "character", path("a2"), "--complex", "-1: 2 | 1 ; d: [a]"}).json()["result"];
  CHECK(res["euler"] == nlohmann::json::array({"1", "-1"}));
  auto scaled = run({"--json", "character", path("loop"), "--complex", "0: 1 | 1 ; d: [x] ; f: [x] | [x]"});
  REQUIRE(scaled.code == 0);
  CHECK(scaled.json()["result"]["character"] == nlohmann::json::array({"0", "0"}));
}

TEST_CASE("verify summarizes outcomes and exits 0 without refutations") {
  Run r = run({"--json", "verify", path("loop"), "--suite", "noloop"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["summary"]["refuted"] == 0);
  CHECK(j["summary"]["inconclusive"].get<int>() >= 1);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("witnesses"));
    if (c["outcome"] == "inconclusive") CHECK(c["bound"].is_number());
  }
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({"info", path("does-not-exist")}).code == 2);
  CHECK(run({"trace", path("a2"), "--endo", "[q]"}).code == 2);
  CHECK(run({"trace", path("a2"), "--endo", "l:a", "--on", "proj:1"}).code == 2);
  CHECK(run({"verify", path("a2"), "--suite", "nope"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Run bad = run({"character", path("loop"), "--complex", "0: 1 | 1 ; d: [1] | [1]"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("the seed comes from HSTRACE_SEED unless given") {
  const std::vector<std::string> base = {"--json", "verify", path("a3rel"), "--suite", "hs", "--trials", "5"};
  auto with = base;
  with.insert(with.end(), {"--seed", "42"});
  const std::string explicit_seed = run(with).out;
  ::setenv("HSTRACE_SEED", "42", 1);
  const std::string from_env = run(base).out;
  ::unsetenv("HSTRACE_SEED");
  CHECK(explicit_seed == from_env);
  CHECK(run(base).out != from_env);
  CHECK(run(with).out == explicit_seed);
}
