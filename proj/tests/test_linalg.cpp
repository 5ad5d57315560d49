#include "doctest.h"
#include "wentw/kernels.hpp"
#include "wentw/matrix.hpp"

using namespace wentw;

namespace {
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

// Deterministic pseudo-random matrices with a given density.
Matrix sample(Field f, std::size_t r, std::size_t c, unsigned seed, int density = 3) {
  Matrix m(f, r, c);
  unsigned s = seed;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      s = s * 1103515245u + 12345u;
      if ((s >> 16) % density == 0) m.set(i, j, Scalar(f, long((s >> 8) % 7) - 3));
    }
  return m;
}
}  // namespace

TEST_CASE("field parsing and scalar arithmetic") {
  CHECK(Field::parse("F_5") == F5);
  CHECK(Field::parse("GF(7)") == Field::prime(7));
  CHECK(Field::parse("Q") == Q);
  CHECK_THROWS_AS(Field::prime(6), DataError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), DataError);
  CHECK(Scalar::parse(Q, "6/4").to_string() == "3/2");
  CHECK(Scalar::parse(F5, "7").to_string() == "2");
  CHECK((Scalar(F5, 3L) * Scalar(F5, 2L)).is_one());
  CHECK((Scalar(F5, 2L).inverse() * Scalar(F5, 2L)).is_one());
  CHECK(Scalar(Q, mpq_class(1, 3)).inverse() == Scalar(Q, 3L));
}

TEST_CASE("rref examples") {
  auto r = rref(Matrix::identity(Q, 2));
  CHECK(r.reduced == Matrix::identity(Q, 2));
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  auto z = rref(Matrix(Q, 2, 3));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivot_cols.empty());
  auto m = rref(Matrix::from_ints(F5, {{2, 4}, {1, 2}}));
  CHECK(m.reduced == Matrix::from_ints(F5, {{1, 2}, {0, 0}}));
  CHECK(m.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(Q, 3)).cols() == 0);
  CHECK(kernel(Matrix(Q, 2, 2)) == Matrix::identity(Q, 2));
  CHECK(kernel(Matrix::from_ints(Q, {{1, 2}})) == Matrix::from_ints(Q, {{-2}, {1}}));
}

TEST_CASE("idempotent splitting examples") {
  auto id = solve_right_inverse_on_image(Matrix::identity(F5, 3));
  CHECK(id.rank == 3);
  CHECK(id.proj == Matrix::identity(F5, 3));
  CHECK(id.incl == Matrix::identity(F5, 3));
  auto z = solve_right_inverse_on_image(Matrix(F5, 2, 2));
  CHECK(z.rank == 0);
  CHECK(z.proj.rows() == 0);
  CHECK(z.incl.cols() == 0);
  auto e = solve_right_inverse_on_image(Matrix::from_ints(F5, {{1, 1}, {0, 0}}));
  CHECK(e.rank == 1);
  CHECK(e.incl == Matrix::from_ints(F5, {{1}, {0}}));
  CHECK(e.proj == Matrix::from_ints(F5, {{1, 1}}));
  CHECK_THROWS_AS(solve_right_inverse_on_image(Matrix::from_ints(F5, {{2, 0}, {0, 0}})), NotIdempotent);
  auto alt = solve_right_inverse_on_image(Matrix::from_ints(F5, {{1, 1}, {0, 0}}), PivotPreference::Rightmost);
  CHECK(alt.proj * alt.incl == Matrix::identity(F5, 1));
  CHECK(alt.incl * alt.proj == Matrix::from_ints(F5, {{1, 1}, {0, 0}}));
}

TEST_CASE("kron examples") {
  CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
  CHECK(kron(Matrix(Q, 2, 2), sample(Q, 3, 2, 1)).is_zero());
  Matrix k = kron(Matrix::from_ints(Q, {{1, 2}}), Matrix::from_ints(Q, {{3}, {4}}));
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k == Matrix::from_ints(Q, {{3, 6}, {4, 8}}));
}

TEST_CASE("linear algebra properties on sampled matrices") {
  for (Field f : {F5, Q, Field::prime(2)}) {
    for (unsigned seed = 1; seed <= 12; ++seed) {
      Matrix m = sample(f, 3 + seed % 4, 2 + seed % 5, seed);
      Matrix k = kernel(m);
      CHECK((m * k).is_zero());
      CHECK(m.rank() + k.cols() == m.cols());
      CHECK(k.rank() == k.cols());
      auto r = rref(m);
      CHECK(rref(r.reduced).reduced == r.reduced);
      for (std::size_t i = 1; i < r.pivot_cols.size(); ++i) CHECK(r.pivot_cols[i - 1] < r.pivot_cols[i]);
      Matrix a = sample(f, 2, 3, seed + 100), b = sample(f, 2, 2, seed + 200), c = sample(f, 3, 1, seed + 300);
      CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
      // A projection onto the column space of m along a complement.
      Matrix cs = column_space(m);
      if (cs.cols() > 0) {
        auto rr = rref(cs.transpose());
        Matrix sel = cs.select_rows(rr.pivot_cols);
        Matrix rows(f, cs.cols(), cs.rows());
        Matrix inv = inverse(sel);
        for (std::size_t i = 0; i < cs.cols(); ++i)
          for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) rows.set(i, rr.pivot_cols[t], inv.at(i, t));
        Matrix e = cs * rows;
        CHECK(e * e == e);
        auto s = solve_right_inverse_on_image(e);
        CHECK(s.rank == e.rank());
        CHECK(s.proj * s.incl == Matrix::identity(f, s.rank));
        CHECK(s.incl * s.proj == e);
        auto s2 = solve_right_inverse_on_image(e, PivotPreference::Rightmost);
        CHECK(s2.incl * s2.proj == e);
      }
      CHECK(m.transpose().transpose() == m);
      CHECK(m.flatten().reshape(m.rows(), m.cols()) == m);
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (Field f : {F5, Q}) {
    Matrix a = sample(f, 37, 29, 7, 2), b = sample(f, 29, 41, 8, 4);
    CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
    Matrix c = sample(f, 31, 45, 9, 2);
    auto rs = kernels::rref_serial(c);
    auto rp = kernels::rref_parallel(c);
    CHECK(rs.reduced == rp.reduced);
    CHECK(rs.pivot_cols == rp.pivot_cols);
  }
}
