#include "doctest.h"
#include "oracle.hpp"
#include "wentw/workspace.hpp"

using namespace wentw;

namespace {
// Oracle verdicts frozen from its first run: axiom1..4, strong_unit, strong_counit.
const std::map<std::string, std::vector<bool>> kFrozen = {
    {"trivial/trivial", {true, true, true, true, true, true}},
    {"triangular-base/triangular", {true, true, true, true, true, true}},
    {"kZ2/k", {true, true, true, true, true, true}},
    {"kZ2/kZ2", {true, true, true, true, true, true}},
    {"sweedler/sweedler", {true, true, true, true, true, true}},
    {"psi-zero/psi-zero", {true, true, true, true, false, false}},
    {"groupoid-2/groupoid-2", {true, true, true, true, false, false}},
};
const char* kAxioms[] = {"axiom1", "axiom2", "axiom3", "axiom4", "strong_unit", "strong_counit"};
}  // namespace

TEST_CASE("oracle verdicts match the frozen table and the checker") {
  std::size_t seen = 0;
  for (auto& name : fixture_names()) {
    Workspace ws = fixture(name);
    for (auto& [en, we] : ws.entwinings) {
      CAPTURE(en);
      auto v = oracle::axiom_verdicts(*we);
      auto it = kFrozen.find(name + "/" + en);
      REQUIRE(it != kFrozen.end());
      Report r = check_weak_entwining(*we);
      for (std::size_t i = 0; i < 6; ++i) {
        CAPTURE(kAxioms[i]);
        CHECK(v.at(kAxioms[i]) == it->second[i]);
        CHECK(r.check_passed(kAxioms[i]) == v.at(kAxioms[i]));
      }
      CHECK(classification_of(r) == oracle::classify(v));
      ++seen;
    }
  }
  CHECK(seen == kFrozen.size());
}

TEST_CASE("oracle detects a sign-flipped psi") {
  Workspace ws = fixture("kZ2");
  const auto& we = ws.entwining("kZ2");
  Matrix flipped = we->psi.mat;
  flipped.set(0, 0, -flipped.at(0, 0));
  auto bad = make_weak_entwining("flipped", we->ring, we->coring, flipped);
  auto v = oracle::axiom_verdicts(*bad);
  CHECK_FALSE(v.at("axiom1"));
  Report r = check_weak_entwining(*bad);
  for (auto* a : kAxioms) CHECK(r.check_passed(a) == v.at(a));
  CHECK(classification_of(r) == Classification::NotEntwining);
}
