#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "braidsym/cli.hpp"
#include "json.hpp"

using braidsym::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("apply") {
  CHECK(run({"apply", "1", "b1"}).out == "a1 b1\n");
  CHECK(run({"apply", "3", "b2"}).out == "a2 A1 b2\n");
  CHECK(run({"apply", "", "a1"}).out == "a1\n");
  CHECK(run({"--genus", "1", "apply", "1 2 3", "a1"}).out == "B1\n");
  const auto j = nlohmann::json::parse(run({"--json", "apply", "1", "b1"}).out);
  CHECK(j["image"] == "a1 b1");
}

TEST_CASE("matrix") {
  const auto m1 = run({"--json", "matrix", "1"});
  CHECK(m1.code == 0);
  CHECK(m1.out == "[[1,0,1,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]\n");
  CHECK(run({"matrix", "DELTA6", "--json"}).out ==
        "[[0,-1,0,0],[-1,0,0,0],[0,0,0,-1],[0,0,-1,0]]\n");
  CHECK(run({"matrix", "", "--json"}).out == "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]\n");
}

TEST_CASE("equal") {
  CHECK(run({"equal", "1 2 1", "2 1 2"}).code == 0);
  CHECK(run({"equal", "GAMMA", "1 -3 5"}).code == 0);
  const auto ne = run({"equal", "1", "2"});
  CHECK(ne.code == 1);
  CHECK(ne.out == "not equal in B_6\n");
  CHECK(run({"equal", "1 2 1", "2 1 2", "--strands", "3"}).code == 0);
  const auto j = nlohmann::json::parse(run({"equal", "1", "1", "--json"}).out);
  CHECK(j["equal"] == true);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "relations"}).code == 0);
  CHECK(run({"verify", "center", "--genus", "3"}).code == 0);
  CHECK(run({"verify", "monoid", "--max-len", "3"}).code == 0);
  const auto sym = run({"verify", "symplectic", "--seed", "99"});
  CHECK(sym.code == 0);
  CHECK(sym.out.find("seed 99") != std::string::npos);

  // The sp4 suite contains checks that fail; see README.
  const auto sp4 = run({"--json", "verify", "sp4"});
  CHECK(sp4.code == 1);
  const auto j = nlohmann::json::parse(sp4.out);
  REQUIRE(j.is_array());
  for (const auto& c : j) {
    CHECK(c.contains("check_id"));
    CHECK(c.contains("description"));
    const std::string status = c["status"];
    CHECK((status == "pass" || status == "fail" || status == "quotient-level-pass"));
    CHECK(c.contains("witness") == (status == "fail"));
  }
}

TEST_CASE("parse") {
  CHECK(run({"parse", "1 -1 2"}).out == "2\n");
  CHECK(run({"parse", "a1 A1 b2", "--as", "word"}).out == "b2\n");
  CHECK(run({"parse", "u1 U4", "--as", "omega"}).out == "u1 U4\n");
  const auto j = nlohmann::json::parse(run({"parse", "ALPHA", "--json"}).out);
  CHECK(j["length"] == 6);
}

TEST_CASE("exit codes for errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "everything"}).code == 2);
  CHECK(run({"--genus", "0", "verify", "relations"}).code == 2);
  const auto bad = run({"apply", "1", "a7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(run({"equal", "9", "1"}).code == 2);
  CHECK(run({"parse", "u3", "--as", "omega"}).code == 2);
  CHECK(run({"--length-cap", "5", "apply", "1 1 1 1 1 1", "b1"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}
