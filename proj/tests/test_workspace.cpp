#include <string>

#include "doctest.h"
#include "wentw/commands.hpp"
#include "wentw/errors.hpp"

using namespace wentw;

namespace {

// The trivial entwining on k over F_5, written by hand.
const std::string kMinimal = R"({
  "format_version": 1,
  "field": "F_5",
  "bimodules": {"R": {"left": "k", "right": "k", "dim": 1, "left_action": [[[1]]], "right_action": [[[1]]]}},
  "rings": {"T": {"carrier": "R", "mu": [[1]], "eta": [[1]]}},
  "corings": {"C": {"carrier": "R", "delta": [[1]], "eps": [[1]]}},
  "entwinings": {"E": {"ring": "T", "coring": "C", "psi": [[1]], "expect": "Strong"}}
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string error_of(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal F_5 workspace parses and is Strong") {
  Workspace ws = parse_workspace(kMinimal);
  CHECK(ws.field == Field::prime(5));
  CHECK(classify(*ws.entwining("E")) == Classification::Strong);
  CommandResult r = run_command("check-entwining", ws);
  CHECK(r.passed());
  CHECK(r.reports.at(0).label("classification") == "Strong");
}

TEST_CASE("malformed scalar 1/0 is a parse error") {
  std::string msg = error_of(replace(kMinimal, R"("eta": [[1]])", R"("eta": [["1/0"]])"));
  CHECK(msg.find("ring 'T'") != std::string::npos);
}

TEST_CASE("dangling coring reference names the reference") {
  std::string msg = error_of(replace(kMinimal, R"("coring": "C")", R"("coring": "Missing")"));
  CHECK(msg.find("Missing") != std::string::npos);
  CHECK(msg.find("entwining 'E'") != std::string::npos);
}

TEST_CASE("syntax errors report line and column") {
  std::string msg = error_of("{\n  \"format_version\": 1,\n  \"field\" \"F_5\"\n}");
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("format version and shapes are enforced") {
  CHECK(error_of(replace(kMinimal, R"("format_version": 1)", R"("format_version": 2)")).find("format_version") !=
        std::string::npos);
  CHECK(error_of(replace(kMinimal, R"("psi": [[1]])", R"("psi": [[1, 0]])")).find("entwining 'E'") !=
        std::string::npos);
  CHECK(error_of(replace(kMinimal, R"("field": "F_5")", R"("field": "F_6")")) != "");
  CHECK_THROWS_AS(fixture("no-such-fixture"), UnknownFixture);
}

TEST_CASE("render then parse reproduces every fixture") {
  for (auto& name : fixture_names()) {
    CAPTURE(name);
    Workspace ws = fixture(name);
    std::string text = render_workspace(ws);
    Workspace back = parse_workspace(text);
    CHECK(render_workspace(back) == text);
    CHECK(back.entwinings.size() == ws.entwinings.size());
    CHECK(back.modules.size() == ws.modules.size());
    for (auto& [en, we] : ws.entwinings) CHECK(classify(*back.entwining(en)) == classify(*we));
  }
}

TEST_CASE("every fixture passes its regression battery") {
  for (auto& name : fixture_names()) {
    CAPTURE(name);
    CommandResult r = run_command("fixtures", Workspace(Field::rationals()), {{name}, PivotPreference::Leftmost});
    REQUIRE(r.reports.size() == 1);
    CHECK(r.passed());
  }
  CommandResult g = run_command("fixtures", Workspace(Field::rationals()), {{"groupoid-2"}, PivotPreference::Leftmost});
  // Idempotent ranks frozen from the first run.
  CHECK(g.reports[0].constant("groupoid-2.rank.ComonadSide") == 8);
  CHECK(g.reports[0].constant("groupoid-2.rank.MonadSide") == 8);
}

TEST_CASE("unknown names and commands are data errors") {
  Workspace ws = fixture("kZ2");
  CHECK_THROWS_AS(run_command("check-entwining", ws, {{"nope"}, PivotPreference::Leftmost}), DataError);
  CHECK_THROWS_AS(run_command("frobnicate", ws), DataError);
  CHECK_THROWS_AS(run_command("fixtures", ws, {{"nope"}, PivotPreference::Leftmost}), UnknownFixture);
}

TEST_CASE("json and text reports agree on verdicts and are deterministic") {
  Workspace ws = fixture("psi-zero");
  auto a = run_suite(ws);
  auto b = run_suite(ws);
  CHECK(render_json(a) == render_json(b));
  CHECK(render_text(a).find("result: PASS") != std::string::npos);
  CHECK(render_json(a).find("\"passed\": true") != std::string::npos);
  CHECK(render_json(a).find("wall_seconds") == std::string::npos);
  CHECK(render_json(a, true).find("wall_seconds") != std::string::npos);
}
