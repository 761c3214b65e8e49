#include "doctest.h"

#include <sstream>

#include "ecdetect/commands.hpp"
#include "ecdetect/errors.hpp"
#include "json.hpp"

using namespace ecdetect;
using nlohmann::json;

namespace {

std::string problem_path(const std::string& name) {
  return std::string(ECDETECT_PROBLEMS_DIR) + "/" + name;
}

CommandResult run(const std::string& cmd, const std::string& file, CommandOptions opts = {}) {
  opts.quiet = true;
  return run_command_file(cmd, problem_path(file), opts);
}

}  // namespace

TEST_CASE("every command is known") {
  const auto& names = command_names();
  for (const char* c : {"dual", "hilbert", "corners", "member", "truncate", "embedded", "deflate",
                        "interpolate"})
    CHECK(std::find(names.begin(), names.end(), c) != names.end());
  const auto bad = run("frobnicate", "staircase.json");
  CHECK(bad.exit_code == kExitError);
}

TEST_CASE("corners of the monomial staircase") {
  const auto res = run("corners", "staircase.json");
  REQUIRE(res.exit_code == kExitOk);
  const auto doc = json::parse(res.output);
  CHECK(doc["results"][0]["rho"] == 5);
  CHECK(doc["results"][0]["mu"] == 10);
  CHECK(doc["results"][0]["scorners"] == json::array({"x^2*y", "x*y^3"}));
}

TEST_CASE("inconclusive staircase exits with 2") {
  CommandOptions opts;
  opts.max_degree = 2;
  const auto res = run("corners", "staircase.json", opts);
  CHECK(res.exit_code == kExitInconclusive);
  const auto doc = json::parse(res.output);
  CHECK(doc["status"] == "inconclusive");
}

TEST_CASE("empty system is an error") {
  const auto res = run("dual", "empty-system.json");
  CHECK(res.exit_code == kExitError);
  CHECK(json::parse(res.output)["status"] == "error");
}

TEST_CASE("missing file is an error") {
  const auto res = run("dual", "does-not-exist.json");
  CHECK(res.exit_code == kExitError);
}

TEST_CASE("dual dimensions of the cusp system") {
  const auto res = run("dual", "cusp.json");
  REQUIRE(res.exit_code == kExitOk);
  const auto doc = json::parse(res.output);
  CHECK(doc["results"][0]["dims"] == json::array({1, 3, 6, 8, 10}));
}

TEST_CASE("member, truncate, deflate and interpolate") {
  auto member = json::parse(run("member", "cusp.json").output);
  std::vector<bool> verdicts;
  for (const auto& r : member["results"]) verdicts.push_back(r["member"].get<bool>());
  CHECK(verdicts == std::vector<bool>{false, false, false, true});

  CommandOptions extra;
  extra.polynomials = {"x^2*y^2 - x^5", "x"};
  member = json::parse(run("member", "cusp.json", extra).output);
  CHECK(member["results"].size() == 6);
  CHECK(member["results"][4]["member"] == true);
  CHECK(member["results"][5]["member"] == false);

  CommandOptions d3;
  d3.degree = 3;
  const auto trunc = json::parse(run("truncate", "cusp.json", d3).output);
  CHECK(trunc["status"] == "ok");

  const auto defl = json::parse(run("deflate", "cusp.json").output);
  CHECK(defl["status"] == "ok");

  const auto interp = run("interpolate", "cusp.json", d3);
  CHECK(interp.exit_code == kExitOk);
}

TEST_CASE("bad --poly text is an error") {
  CommandOptions opts;
  opts.polynomials = {"x +* y"};
  CHECK(run("member", "cusp.json", opts).exit_code == kExitError);
}

TEST_CASE("embedded verdicts on five lines and two planes") {
  const auto res = run("embedded", "five_lines_two_planes.json");
  REQUIRE(res.exit_code == kExitOk);
  const auto doc = json::parse(res.output);
  REQUIRE(doc["results"].size() == 2);
  for (const auto& r : doc["results"]) {
    CHECK(r["verdict"] == false);
    CHECK(r["certificate_type"] == "coverage");
  }
  CHECK(doc["results"][1].contains("slice_point"));
}

TEST_CASE("output is byte-identical for a fixed seed") {
  CommandOptions opts;
  opts.seed = 7;
  const auto a = run("embedded", "cyclic4.json", opts);
  const auto b = run("embedded", "cyclic4.json", opts);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.output == b.output);
  const auto doc = json::parse(a.output);
  REQUIRE(doc["results"].size() == 8);
  for (const auto& r : doc["results"]) {
    CHECK(r["verdict"] == true);
    CHECK(r["witness_degree"] == 1);
  }
}

TEST_CASE("flags override the problem config") {
  CommandOptions opts;
  opts.delta = 1e-10;
  opts.seed = 3;
  const auto doc = json::parse(run("hilbert", "staircase.json", opts).output);
  CHECK(doc["config"]["delta"] == 1e-10);
  CHECK(doc["config"]["seed"] == 3);
}

TEST_CASE("problem parse errors carry positions") {
  try {
    (void)parse_problem("{\n  \"variables\": [\"x\"],\n  \"generators\": [\"x +\"]\n}");
    FAIL("expected ProblemFileError");
  } catch (const ProblemFileError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
  try {
    (void)parse_problem("{\n  \"variables\": [\"x\"]\n  \"generators\": []\n}");
    FAIL("expected ProblemFileError");
  } catch (const ProblemFileError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "generators": [], "bogus": 1})"),
                  ProblemFileError);
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "generators": [], "config": {"delta": 2}})"),
                  ProblemFileError);
  CHECK_THROWS_AS(parse_problem(R"({"variables": ["x"], "generators": ["x"],
      "components": [{"id": "c", "dim": 1, "parametrization": ["t", "t"]}]})"),
                  ProblemFileError);
}

TEST_CASE("shipped problem files load") {
  for (const char* f : {"cyclic4.json", "five_lines_two_planes.json", "staircase.json", "cusp.json",
                        "empty-system.json"}) {
    CAPTURE(f);
    CHECK_NOTHROW(load_problem(problem_path(f)));
  }
}
