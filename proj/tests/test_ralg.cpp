#include "doctest.h"
#include "wentw/tensor.hpp"

using namespace wentw;

namespace {
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

// Upper-triangular 2x2 matrices, basis e11, e12, e22.
AlgebraPtr triangular(Field f) {
  Matrix mult(f, 3, 9);
  auto put = [&](int i, int j, int k) { mult.set(k, i * 3 + j, Scalar(f, 1L)); };
  put(0, 0, 0);  // e11 e11 = e11
  put(0, 1, 1);  // e11 e12 = e12
  put(1, 2, 1);  // e12 e22 = e12
  put(2, 2, 2);  // e22 e22 = e22
  return make_algebra("U2", f, mult, Matrix::from_ints(f, {{1}, {0}, {1}}));
}

// k x k with idempotents p0, p1.
AlgebraPtr kxk(Field f) {
  Matrix mult(f, 2, 4);
  mult.set(0, 0, Scalar(f, 1L));
  mult.set(1, 3, Scalar(f, 1L));
  return make_algebra("kxk", f, mult, Matrix::from_ints(f, {{1}, {1}}));
}

// The 1-dimensional k x k bimodule on which both sides act through projection `which`.
BimodulePtr simple(const AlgebraPtr& r, int which) {
  Field f = r->field;
  std::vector<Matrix> acts{Matrix::from_ints(f, {{which == 0 ? 1 : 0}}), Matrix::from_ints(f, {{which == 1 ? 1 : 0}})};
  return make_bimodule(which == 0 ? "S1" : "S2", r, r, 1, acts, acts);
}
}  // namespace

TEST_CASE("check_algebra examples") {
  CHECK(check_algebra(*ground_algebra(F5)).passed());
  CHECK(check_algebra(*triangular(F5)).passed());
  auto bad = make_algebra("bad", Q, Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{1}}));
  Report r = check_algebra(*bad);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("left_unit") != nullptr);
  CHECK_FALSE(r.find("left_unit")->passed);
  CHECK(r.find("left_unit")->witness->basis_index == 0);
}

TEST_CASE("brute-force associativity of the triangular algebra") {
  auto a = triangular(F5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Matrix ei = Matrix::unit_column(F5, 3, i), ej = Matrix::unit_column(F5, 3, j), ek = Matrix::unit_column(F5, 3, k);
        CHECK(a->product(a->product(ei, ej), ek) == a->product(ei, a->product(ej, ek)));
      }
  CHECK(check_bimodule(*regular_bimodule(a)).passed());
}

TEST_CASE("tensor_over_R examples") {
  auto v = vector_space("V", Q, 2), w = vector_space("W", Q, 3);
  auto t = tensor_over_R(v, w);
  CHECK(t->dim() == 6);
  CHECK(t->trivial);
  CHECK(t->proj == Matrix::identity(Q, 6));

  auto u = triangular(F5);
  auto reg = unit_bimodule(u);
  auto uu = tensor_over_R(reg, reg);
  CHECK(uu->dim() == 3);
  // The multiplication induces an isomorphism R (x)_R R -> R.
  Matrix m = left_unitor(reg);
  CHECK(m.rank() == 3);
  CHECK(m == right_unitor(reg));

  auto r = kxk(Q);
  CHECK(tensor_over_R(simple(r, 0), simple(r, 1))->dim() == 0);
  CHECK(tensor_over_R(simple(r, 0), simple(r, 0))->dim() == 1);
  CHECK_THROWS_AS(tensor_over_R(simple(r, 0), v), BaseMismatch);
}

TEST_CASE("hom_space examples") {
  auto k = ground_algebra(Q);
  CHECK(hom_space(unit_bimodule(k), unit_bimodule(k)).size() == 1);
  auto r = kxk(Q);
  CHECK(hom_space(simple(r, 0), simple(r, 1)).empty());
  auto u = triangular(F5);
  auto reg = unit_bimodule(u);
  auto ends = hom_space(reg, reg);
  // Bimodule endomorphisms of R are multiplications by central elements.
  CHECK(ends.size() == 1);
  for (auto& e : ends) CHECK(is_intertwiner(*reg, *reg, e.mat));
  std::vector<Matrix> mats;
  for (auto& e : ends) mats.push_back(e.mat.flatten());
  Matrix span = Matrix::hstack(mats, F5, 9);
  CHECK(Matrix::hstack({span, Matrix::identity(F5, 3).flatten()}, F5, 9).rank() == span.rank());
}

TEST_CASE("unitors are invertible for one-sided modules") {
  auto u = triangular(F5);
  auto reg = unit_bimodule(u);
  auto row = make_bimodule("e11R", ground_algebra(F5), u, 2, {Matrix::identity(F5, 2)},
                           {Matrix::from_ints(F5, {{1, 0}, {0, 0}}), Matrix::from_ints(F5, {{0, 0}, {1, 0}}),
                            Matrix::from_ints(F5, {{0, 0}, {0, 1}})});
  CHECK(check_bimodule(*row).passed());
  auto t = tensor_over_R(row, reg);
  CHECK(t->dim() == 2);
  CHECK(right_unitor(row).rank() == 2);
}

TEST_CASE("tensor_maps over the ground field and functoriality") {
  auto v = vector_space("V", Q, 2), w = vector_space("W", Q, 2);
  Matrix f = Matrix::from_ints(Q, {{1, 2}, {3, 4}}), g = Matrix::from_ints(Q, {{0, 1}, {1, 1}});
  auto fg = tensor_maps({v, v, f}, {w, w, g});
  CHECK(fg.mat == kron(f, g));
  auto id = tensor_maps(identity_map(v), identity_map(w));
  CHECK(id.mat.is_identity());
  auto lhs = tensor_maps({v, v, f * f}, {w, w, g * g});
  CHECK(lhs.mat == fg.mat * fg.mat);
}

TEST_CASE("associator is invertible over a noncommutative base") {
  auto u = triangular(F5);
  auto reg = unit_bimodule(u);
  Iso a = associator(reg, reg, reg);
  CHECK((a.forward * a.backward).is_identity());
  CHECK(a.forward.rows() == 3);
}

TEST_CASE("whiskering a unit cell inserts the base unit") {
  auto u = triangular(F5);
  auto reg = unit_bimodule(u);
  Word r = word_of({reg});
  // eta: 1 -> [R] as the identity of R; whiskered by R on the left it is the right unitor's inverse.
  Cell eta = make_cell(identity_word(u), r, Matrix::identity(F5, 3));
  Cell w = whisker(r, eta, identity_word(u));
  CHECK(w.mat.rows() == 3);
  CHECK((right_unitor(reg) * w.mat).is_identity());
  Cell mu = make_cell(word_of({reg, reg}), r, left_unitor(reg));
  Cell back = compose(mu, w);
  CHECK(back.mat.is_identity());
}
