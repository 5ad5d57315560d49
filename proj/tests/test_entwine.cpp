#include "doctest.h"
#include "wentw/errors.hpp"
#include "wentw/workspace.hpp"

using namespace wentw;

namespace {
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

AlgebraPtr kxk(Field f) {
  Matrix mult(f, 2, 4);
  mult.set(0, 0, Scalar(f, 1L));
  mult.set(1, 3, Scalar(f, 1L));
  return make_algebra("kxk", f, mult, Matrix::from_ints(f, {{1}, {1}}));
}

bool weak(const WeakEntwining& we) { return classify(we) != Classification::NotEntwining; }
}  // namespace

TEST_CASE("trivial entwinings are Strong") {
  CHECK(classify(*trivial_entwining(ground_algebra(Q))) == Classification::Strong);
  auto kk = trivial_entwining(kxk(Q));
  CHECK(classify(*kk) == Classification::Strong);
  CHECK(kk->ring->carrier->dim == 2);
  CHECK(kk->coring->carrier->dim == 2);
  CHECK(present(kk->C() + kk->T())->dim() == 2);
  auto u = fixture("triangular-base").algebra("U2");
  CHECK(classify(*trivial_entwining(u)) == Classification::Strong);
}

TEST_CASE("canonical idempotents on the fixtures") {
  for (auto& name : fixture_names()) {
    Workspace ws = fixture(name);
    for (auto& [en, we] : ws.entwinings) {
      CAPTURE(en);
      REQUIRE(weak(*we));
      for (Side s : {Side::ComonadSide, Side::MonadSide}) {
        CAPTURE(to_string(s));
        auto ci = canonical_idempotent(*we, s);
        const Matrix& e = ci.e.mat;
        CHECK(e * e == e);
        CHECK(is_bimodule_cell(ci.e));
        if (classify(*we) == Classification::Strong) CHECK(e.is_identity());
      }
    }
  }
  auto z = fixture("psi-zero").entwining("psi-zero");
  for (Side s : {Side::ComonadSide, Side::MonadSide}) CHECK(canonical_idempotent(*z, s).e.mat.is_zero());
  // Rank frozen from the first run; strictly between 0 and dim(T (x) C) = 16.
  auto g = fixture("groupoid-2").entwining("groupoid-2");
  CHECK(canonical_idempotent(*g, Side::ComonadSide).e.mat.rank() == 8);
  CHECK(canonical_idempotent(*g, Side::MonadSide).e.mat.rank() == 8);
}

TEST_CASE("idempotent failure is signalled") {
  auto we = fixture("kZ2").entwining("kZ2");
  // Twice the canonical psi breaks idempotency of the comonad-side map.
  auto bad = make_weak_entwining("twice", we->ring, we->coring, we->psi.mat.scaled(Scalar(F5, 2L)));
  CHECK(classify(*bad) == Classification::NotEntwining);
  CHECK_THROWS_AS(canonical_idempotent(*bad, Side::ComonadSide), NotIdempotent);
}

TEST_CASE("monad 1-cell and 2-cell conditions") {
  auto we = fixture("groupoid-2").entwining("groupoid-2");
  CHECK(check_mnd_iota_1cell(comonad_cell(*we)).check_passed("one_cell"));
  auto id = identity_mnd_cell(we->ring);
  CHECK(check_mnd_iota_1cell(id).passed());
  CHECK(check_mnd_iota_2cell(id, id, identity_cell(we->one())).passed());

  auto kz = fixture("kZ2").entwining("kZ2");
  MndCell flipped = comonad_cell(*kz);
  flipped.psi.mat.set(0, 0, -flipped.psi.mat.at(0, 0));
  CHECK_FALSE(check_mnd_iota_1cell(flipped).check_passed("one_cell"));
}

TEST_CASE("entwining 1-cells") {
  for (auto& name : fixture_names()) {
    Workspace ws = fixture(name);
    for (auto& [en, we] : ws.entwinings) {
      CAPTURE(en);
      CHECK(check_entw_1cell(identity_entw_1cell(we)).passed());
    }
  }
  Workspace ws = fixture("kZ2");
  const auto& triv = ws.entwining("k");
  const auto& kz = ws.entwining("kZ2");
  CHECK(check_entw_1cell(ws.one_cell("hopf")).passed());

  // beta = 0 with a nonzero counit fails the counit equality.
  const EntwOneCell& id = ws.one_cell("id");
  auto zero_beta = make_entw_1cell(kz, kz, id.w, id.alpha.mat, Matrix(F5, id.beta.mat.rows(), id.beta.mat.cols()));
  Report zb = check_entw_1cell(zero_beta);
  CHECK_FALSE(zb.check_passed("beta_counit"));
  CHECK(zb.check_passed("alpha_mult"));

  // The diagonal cell k -> F_5[Z/2]: W = k, alpha = counit, beta(1) = 1.
  auto w = triv->ring->carrier;
  auto diag = make_entw_1cell(triv, kz, w, Matrix::from_ints(F5, {{1, 1}}), Matrix::from_ints(F5, {{1}, {0}}));
  Report d = check_entw_1cell(diag);
  for (auto* n : {"alpha_mult", "alpha_unit", "beta_comult", "beta_counit"}) CHECK(d.check_passed(n));
  // g . a differs from eps(a) g, so both mixed conditions fail at a = g.
  CHECK_FALSE(d.check_passed("mixed_unit"));
  CHECK_FALSE(d.check_passed("mixed_counit"));
}

TEST_CASE("entwining 2-cells") {
  Workspace ws = fixture("kZ2");
  const EntwOneCell& h = ws.one_cell("hopf");
  CHECK(check_entw_2cell(h, h, Matrix::identity(F5, 2)).passed());
  CHECK(check_entw_2cell(h, h, Matrix(F5, 2, 2)).passed());
  Matrix perturbed = Matrix::from_ints(F5, {{1, 1}, {0, 1}});
  Report r = check_entw_2cell(h, h, perturbed);
  REQUIRE(r.find("alpha_naturality") != nullptr);
  CHECK_FALSE(r.find("alpha_naturality")->passed);
  CHECK(r.find("alpha_naturality")->witness.has_value());
}

TEST_CASE("linear dual") {
  auto triv = fixture("trivial").entwining("trivial");
  auto d = linear_dual(*triv);
  CHECK(classify(*d) == Classification::Strong);
  CHECK(d->psi.mat == triv->psi.mat);
  CHECK(d->ring->mu.mat == triv->ring->mu.mat);

  for (auto* name : {"kZ2", "sweedler", "psi-zero", "groupoid-2"}) {
    CAPTURE(name);
    Workspace ws = fixture(name);
    const auto& we = ws.entwining(name);
    auto dual = linear_dual(*we);
    CHECK(classify(*dual) == classify(*we));
    auto dd = linear_dual(*dual);
    CHECK(dd->psi.mat == we->psi.mat);
    CHECK(dd->coring->delta.mat == we->coring->delta.mat);
    CHECK(canonical_idempotent(*we, Side::MonadSide).e.mat ==
          canonical_idempotent(*dual, Side::ComonadSide).e.mat.transpose());
  }
  CHECK_THROWS_AS(linear_dual(*fixture("triangular-base").entwining("triangular")), UnsupportedBase);
}

TEST_CASE("mirror convention classification") {
  // Frozen from the first run: the canonical entwining of a commutative,
  // cocommutative Hopf algebra is not an entwining in the mirrored orientation.
  CHECK(mirror_classification(*fixture("kZ2").entwining("kZ2")) == Classification::NotEntwining);
  CHECK(mirror_classification(*fixture("trivial").entwining("trivial")) == Classification::Strong);
  CHECK_FALSE(mirror_classification(*fixture("triangular-base").entwining("triangular")).has_value());
}
