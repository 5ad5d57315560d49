// Acceptance run: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>

#include "oracle.hpp"
#include "wentw/commands.hpp"
#include "wentw/workspace.hpp"

using namespace wentw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Accumulates failures of one criterion; `detail` collects the first few.
struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  int notes = 0;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes++ < 4) detail << (notes > 1 ? "; " : "") << what;
  }
};

std::map<std::string, Workspace> load_fixtures() {
  std::map<std::string, Workspace> out;
  for (auto& n : fixture_names()) out.emplace(n, fixture(n));
  return out;
}

const std::map<std::string, Workspace>& fixtures() {
  static const auto all = load_fixtures();
  return all;
}

void each_entwining(const std::function<void(const std::string&, const std::string&, const WeakEntwiningPtr&)>& f) {
  for (auto& [fx, ws] : fixtures())
    for (auto& [en, we] : ws.entwinings) f(fx, en, we);
}

void oracle_equivalence(Outcome& o) {
  for (auto& [fx, ws] : fixtures()) {
    const auto t0 = Clock::now();
    for (auto& [en, we] : ws.entwinings) {
      const Report r = check_weak_entwining(*we);
      const auto verdicts = oracle::axiom_verdicts(*we);
      for (auto& [axiom, v] : verdicts) {
        const Check* c = r.find(axiom);
        const bool checker = c ? c->passed : r.label(axiom) == std::optional<std::string>("holds");
        o.require(checker == v, fx + "/" + en + " " + axiom);
      }
      o.require(classification_of(r) == oracle::classify(verdicts), fx + "/" + en + " classification");
    }
    const double s = seconds_since(t0);
    o.require(s < 5.0, fx + " took " + std::to_string(s) + " s");
  }
}

void classifications(Outcome& o) {
  const std::map<std::string, Classification> documented = {
      {"trivial", Classification::Strong},  {"triangular", Classification::Strong},
      {"kZ2", Classification::Strong},      {"k", Classification::Strong},
      {"sweedler", Classification::Strong}, {"psi-zero", Classification::WeakOnly},
      {"groupoid-2", Classification::WeakOnly}};
  each_entwining([&](const std::string& fx, const std::string& en, const WeakEntwiningPtr& we) {
    const Classification c = classify(*we);
    auto it = documented.find(en);
    o.require(it != documented.end() && it->second == c, fx + "/" + en + " is " + to_string(c));
    auto ex = fixtures().at(fx).expected.find(en);
    o.require(ex != fixtures().at(fx).expected.end() && ex->second == c, fx + "/" + en + " expectation");
  });
}

void idempotents(Outcome& o) {
  each_entwining([&](const std::string& fx, const std::string& en, const WeakEntwiningPtr& we) {
    const Classification c = classify(*we);
    if (c == Classification::NotEntwining) return;
    const std::size_t ambient = present(we->T() + we->C())->dim();
    for (Side side : {Side::ComonadSide, Side::MonadSide}) {
      const std::string tag = fx + "/" + en + " " + to_string(side);
      try {
        const Cell e = canonical_idempotent(*we, side).e;
        o.require(e.mat * e.mat == e.mat, tag + " not idempotent");
        const SplitIdempotent s = solve_right_inverse_on_image(e.mat);
        o.require(s.proj * s.incl == Matrix::identity(e.mat.field(), s.rank), tag + " proj incl");
        o.require(s.incl * s.proj == e.mat, tag + " incl proj");
        if (c == Classification::Strong) {
          o.require(e.mat.is_identity(), tag + " not identity");
          o.require(s.rank == ambient, tag + " rank");
        }
        if (en == "sweedler") o.require(s.rank == 16, tag + " rank " + std::to_string(s.rank));
      } catch (const Error& err) {
        o.require(false, tag + ": " + err.what());
      }
    }
  });
}

void lifted_corings(Outcome& o) {
  each_entwining([&](const std::string& fx, const std::string& en, const WeakEntwiningPtr& we) {
    if (classify(*we) == Classification::NotEntwining) return;
    try {
      o.require(check_lifted_coring(lift_comonad(we)).passed(), fx + "/" + en);
    } catch (const Error& err) {
      o.require(false, fx + "/" + en + ": " + err.what());
    }
  });
}

void round_trips(Outcome& o) {
  int count = 0;
  bool saw_kz2 = false;
  for (auto& [fx, ws] : fixtures()) {
    for (auto& [mn, x] : ws.modules) {
      const std::string tag = fx + "/" + mn;
      try {
        auto lc = std::make_shared<const LiftedCoring>(lift_comonad(x.we));
        const auto y = kappa_to_xi(lc, x);
        const auto back = xi_to_kappa(y);
        const auto a = to_lifted_monad_algebra(x);
        const auto from = from_lifted_monad_algebra(a);
        const bool ok = back.action.mat == x.action.mat && back.coaction.mat == x.coaction.mat &&
                        kappa_to_xi(lc, back).comodule.coaction.mat == y.comodule.coaction.mat &&
                        from.action.mat == x.action.mat && from.coaction.mat == x.coaction.mat &&
                        to_lifted_monad_algebra(from).action == a.action;
        o.require(ok, tag);
        if (ok) {
          ++count;
          saw_kz2 = saw_kz2 || (fx == "kZ2" && mn == "H");
        }
      } catch (const Error& err) {
        o.require(false, tag + ": " + err.what());
      }
    }
  }
  o.require(count >= 4, "only " + std::to_string(count) + " modules");
  o.require(saw_kz2, "kZ2 H missing");
}

void hom_dims(Outcome& o) {
  for (auto& [fx, ws] : fixtures()) {
    for (auto& [en, we] : ws.entwinings) {
      const auto mods = ws.modules_of(en);
      if (mods.empty()) continue;
      const Report r = verify_em_equivalence(we, mods, ws.pairs_of(en));
      o.require(r.passed(), fx + "/" + en);
      for (auto& [a, b] : ws.pairs_of(en)) {
        const std::string p = "hom." + a + "." + b + ".";
        const auto e = r.constant(p + "entwined"), c = r.constant(p + "comodule"), m = r.constant(p + "monad");
        o.require(e && e == c && c == m, fx + "/" + en + " " + a + "," + b);
      }
    }
  }
  const Report r = verify_em_equivalence(fixtures().at("kZ2").entwining("kZ2"), fixtures().at("kZ2").modules_of("kZ2"),
                                         fixtures().at("kZ2").pairs_of("kZ2"));
  o.require(r.constant("hom.H.H.entwined") == 1, "kZ2 (H,H) dimension");
}

void coherence(Outcome& o) {
  each_entwining([&](const std::string& fx, const std::string& en, const WeakEntwiningPtr& we) {
    if (classify(*we) == Classification::NotEntwining) return;
    try {
      const Report r = check_coherence_triple(we);
      for (auto* c : {"gamma_invertible", "triple_consistency", "identity_strict"})
        o.require(r.check_passed(c), fx + "/" + en + " " + c);
    } catch (const Error& err) {
      o.require(false, fx + "/" + en + ": " + err.what());
    }
  });
}

using Verdicts = std::map<std::tuple<std::string, std::string, std::string>, bool>;

Verdicts verdicts_of(const std::vector<CommandResult>& results) {
  Verdicts v;
  for (auto& cr : results)
    for (auto& rep : cr.reports)
      for (auto& c : rep.checks) v[{cr.command, rep.title, c.name}] = c.passed;
  return v;
}

void splitting_independence(Outcome& o) {
  for (auto& [fx, ws] : fixtures()) {
    const Verdicts left = verdicts_of(run_suite(ws, PivotPreference::Leftmost));
    const Verdicts right = verdicts_of(run_suite(ws, PivotPreference::Rightmost));
    o.require(left == right, fx + " verdicts differ");
    for (auto& [key, passed] : right)
      if (std::get<2>(key).rfind("splitting.", 0) == 0) o.require(passed, fx + " " + std::get<2>(key));
  }
}

void duality(Outcome& o) {
  for (auto* fx : {"kZ2", "sweedler", "psi-zero", "groupoid-2"}) {
    const Workspace& ws = fixtures().at(fx);
    for (auto& [en, we] : ws.entwinings) {
      if (classify(*we) == Classification::NotEntwining) continue;
      try {
        const auto d = linear_dual(*we);
        o.require(classify(*d) == classify(*we), std::string(fx) + "/" + en + " dual classification");
        o.require(canonical_idempotent(*we, Side::MonadSide).e.mat ==
                      canonical_idempotent(*d, Side::ComonadSide).e.mat.transpose(),
                  std::string(fx) + "/" + en + " monad side");
        o.require(canonical_idempotent(*we, Side::ComonadSide).e.mat ==
                      canonical_idempotent(*d, Side::MonadSide).e.mat.transpose(),
                  std::string(fx) + "/" + en + " comonad side");
      } catch (const Error& err) {
        o.require(false, std::string(fx) + "/" + en + ": " + err.what());
      }
    }
  }
}

std::string full_run() {
  std::vector<CommandResult> all;
  for (auto& n : fixture_names()) {
    auto r = run_suite(fixture(n));
    all.insert(all.end(), r.begin(), r.end());
  }
  all.push_back(run_command("fixtures", fixture("trivial")));
  return render_json(all);
}

void determinism(Outcome& o) {
  const auto t0 = Clock::now();
  const std::string a = full_run();
  const std::string b = full_run();
  const double s = seconds_since(t0);
  o.require(a == b, "reports differ");
  o.require(s < 60.0, "took " + std::to_string(s) + " s");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
      {"checker agrees with the brute-force oracle", oracle_equivalence},
      {"fixture classifications", classifications},
      {"canonical idempotents and splittings", idempotents},
      {"lifted coring axioms", lifted_corings},
      {"module round trips", round_trips},
      {"equal hom dimensions", hom_dims},
      {"coherence of the lifted comultiplication", coherence},
      {"independence of the splitting", splitting_independence},
      {"duality transposes the idempotents", duality},
      {"deterministic full runs", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu: %s %s (%.2f s)%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.ok ? "" : ": ", o.detail.str().c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("acceptance: %d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
