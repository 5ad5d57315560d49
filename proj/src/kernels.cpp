#include "wentw/kernels.hpp"

#include <utility>

#include "wentw/errors.hpp"

namespace wentw::kernels {

namespace {

// Row-wise product C = A * B. For every row i of A, the nonzero entries
// a_ik scatter a_ik * B[k, nz] into an accumulator row. B's nonzero
// pattern is indexed once up front so sparse Kronecker factors stay cheap.
struct SparseRows {
  std::vector<std::size_t> start;
  std::vector<std::size_t> col;
};

template <class Vec>
SparseRows index_rows(const Vec& data, std::size_t rows, std::size_t cols) {
  SparseRows s;
  s.start.reserve(rows + 1);
  s.start.push_back(0);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t j = 0; j < cols; ++j)
      if (data[k * cols + j] != 0) s.col.push_back(j);
    s.start.push_back(s.col.size());
  }
  return s;
}

void mod_row(const Matrix& a, const Matrix& b, const SparseRows& nz, std::size_t i, std::uint32_t p,
             std::vector<std::uint64_t>& acc, std::uint32_t* out) {
  const auto& ad = a.mod_data();
  const auto& bd = b.mod_data();
  const std::size_t n = a.cols(), m = b.cols();
  std::fill(acc.begin(), acc.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t x = ad[i * n + k];
    if (x == 0) continue;
    for (std::size_t t = nz.start[k]; t < nz.start[k + 1]; ++t) {
      std::size_t j = nz.col[t];
      acc[j] = (acc[j] + x * bd[k * m + j]) % p;
    }
  }
  for (std::size_t j = 0; j < m; ++j) out[j] = std::uint32_t(acc[j]);
}

void rat_row(const Matrix& a, const Matrix& b, const SparseRows& nz, std::size_t i, mpq_class* out) {
  const auto& ad = a.rat_data();
  const auto& bd = b.rat_data();
  const std::size_t n = a.cols(), m = b.cols();
  mpq_class tmp;
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class& x = ad[i * n + k];
    if (x == 0) continue;
    for (std::size_t t = nz.start[k]; t < nz.start[k + 1]; ++t) {
      std::size_t j = nz.col[t];
      tmp = x * bd[k * m + j];
      out[j] += tmp;
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b, bool parallel) {
  if (!(a.field() == b.field())) throw ShapeMismatch("matrix product over different fields");
  if (a.cols() != b.rows())
    throw ShapeMismatch("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  Matrix c(a.field(), a.rows(), b.cols());
  const std::size_t rows = a.rows(), m = b.cols();
  const long long nrows = static_cast<long long>(rows);
  if (a.field().is_prime_field()) {
    const auto p = std::uint32_t(a.field().characteristic());
    SparseRows nz = index_rows(b.mod_data(), b.rows(), b.cols());
    auto& cd = c.mod_data();
    if (parallel) {
#pragma omp parallel
      {
        std::vector<std::uint64_t> acc(m);
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < nrows; ++i) mod_row(a, b, nz, std::size_t(i), p, acc, cd.data() + std::size_t(i) * m);
      }
    } else {
      std::vector<std::uint64_t> acc(m);
      for (std::size_t i = 0; i < rows; ++i) mod_row(a, b, nz, i, p, acc, cd.data() + i * m);
    }
  } else {
    SparseRows nz = index_rows(b.rat_data(), b.rows(), b.cols());
    auto& cd = c.rat_data();
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long long i = 0; i < nrows; ++i) rat_row(a, b, nz, std::size_t(i), cd.data() + std::size_t(i) * m);
    } else {
      for (std::size_t i = 0; i < rows; ++i) rat_row(a, b, nz, i, cd.data() + i * m);
    }
  }
  return c;
}

// Gauss-Jordan elimination with leftmost pivots. The pivot search and the
// normalization are serial; clearing the pivot column from the other rows is
// the data-parallel part.
RrefResult gauss_jordan_mod(Matrix m, bool parallel) {
  const auto p = std::uint32_t(m.field().characteristic());
  auto& d = m.mod_data();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (d[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(d[piv * cols + j], d[r * cols + j]);
    std::uint32_t inv = modp::inv(d[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) d[r * cols + j] = modp::mul(d[r * cols + j], inv, p);
    // Nonzero tail of the pivot row, so elimination touches only those entries.
    std::vector<std::size_t> tail;
    for (std::size_t j = c; j < cols; ++j)
      if (d[r * cols + j] != 0) tail.push_back(j);
    const std::size_t pr = r;
    auto eliminate = [&](std::size_t i) {
      if (i == pr) return;
      std::uint32_t f = d[i * cols + c];
      if (f == 0) return;
      for (std::size_t j : tail) d[i * cols + j] = modp::sub(d[i * cols + j], modp::mul(f, d[pr * cols + j], p), p);
    };
    if (parallel) {
      const long long n = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < n; ++i) eliminate(std::size_t(i));
    } else {
      for (std::size_t i = 0; i < rows; ++i) eliminate(i);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

RrefResult gauss_jordan_rat(Matrix m, bool parallel) {
  auto& d = m.rat_data();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (d[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(d[piv * cols + j], d[r * cols + j]);
    mpq_class inv = 1 / d[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) d[r * cols + j] *= inv;
    std::vector<std::size_t> tail;
    for (std::size_t j = c; j < cols; ++j)
      if (d[r * cols + j] != 0) tail.push_back(j);
    const std::size_t pr = r;
    auto eliminate = [&](std::size_t i) {
      if (i == pr) return;
      if (d[i * cols + c] == 0) return;
      mpq_class f = d[i * cols + c];
      for (std::size_t j : tail) d[i * cols + j] -= f * d[pr * cols + j];
    };
    if (parallel) {
      const long long n = static_cast<long long>(rows);
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < n; ++i) eliminate(std::size_t(i));
    } else {
      for (std::size_t i = 0; i < rows; ++i) eliminate(i);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

RrefResult gauss_jordan(const Matrix& m, bool parallel) {
  return m.field().is_prime_field() ? gauss_jordan_mod(m, parallel) : gauss_jordan_rat(m, parallel);
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) { return multiply(a, b, false); }
Matrix multiply_parallel(const Matrix& a, const Matrix& b) { return multiply(a, b, true); }
RrefResult rref_serial(const Matrix& m) { return gauss_jordan(m, false); }
RrefResult rref_parallel(const Matrix& m) { return gauss_jordan(m, true); }

}  // namespace wentw::kernels
