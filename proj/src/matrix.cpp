#include "wentw/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "wentw/kernels.hpp"

namespace wentw {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime_field())
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  else
    data_ = std::vector<mpq_class>(rows * cols);
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(f, 1L));
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_ints(f, v);
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
  Matrix m(f, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, Scalar(f, rows[i][j]));
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& entries, Field f) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::unit_column(Field f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.set(i, 0, Scalar(f, 1L));
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (field_.is_prime_field()) return Scalar::residue(field_, mod_data()[i * cols_ + j]);
  return Scalar(field_, rat_data()[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (!(v.field() == field_)) throw ShapeMismatch("scalar from a different field");
  if (field_.is_prime_field())
    mod_data()[i * cols_ + j] = v.residue_value();
  else
    rat_data()[i * cols_ + j] = v.rational_value();
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
  return field_.is_prime_field() ? mod_data()[i * cols_ + j] == 0 : rat_data()[i * cols_ + j] == 0;
}

void Matrix::require_same_shape(const Matrix& o, const char* what) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch(std::string(what) + ": shape mismatch " + std::to_string(rows_) + "x" +
                        std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_shape(o, "sum");
  Matrix r = *this;
  if (field_.is_prime_field()) {
    auto p = std::uint32_t(field_.characteristic());
    auto& d = r.mod_data();
    const auto& od = o.mod_data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = modp::add(d[i], od[i], p);
  } else {
    auto& d = r.rat_data();
    const auto& od = o.rat_data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += od[i];
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_shape(o, "difference");
  Matrix r = *this;
  if (field_.is_prime_field()) {
    auto p = std::uint32_t(field_.characteristic());
    auto& d = r.mod_data();
    const auto& od = o.mod_data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = modp::sub(d[i], od[i], p);
  } else {
    auto& d = r.rat_data();
    const auto& od = o.rat_data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= od[i];
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (rows_ * cols_ * o.cols_ >= kernels::kParallelThreshold) return kernels::multiply_parallel(*this, o);
  return kernels::multiply_serial(*this, o);
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  if (field_.is_prime_field()) {
    auto p = std::uint32_t(field_.characteristic());
    for (auto& x : r.mod_data()) x = modp::mul(x, s.residue_value(), p);
  } else {
    for (auto& x : r.rat_data()) x *= s.rational_value();
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  if (field_.is_prime_field()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.mod_data()[j * rows_ + i] = mod_data()[i * cols_ + j];
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.rat_data()[j * rows_ + i] = rat_data()[i * cols_ + j];
  }
  return t;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      bool z = is_zero_at(i, j);
      if (i == j ? !at(i, j).is_one() : !z) return false;
    }
  return true;
}

std::size_t Matrix::nonzeros() const {
  if (field_.is_prime_field())
    return std::size_t(std::count_if(mod_data().begin(), mod_data().end(), [](auto x) { return x != 0; }));
  return std::size_t(std::count_if(rat_data().begin(), rat_data().end(), [](const auto& x) { return x != 0; }));
}

Matrix Matrix::column(std::size_t j) const {
  std::size_t idx[1] = {j};
  return select_columns(idx);
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix r(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] >= cols_) throw ShapeMismatch("column index out of range");
      if (field_.is_prime_field())
        r.mod_data()[i * cols.size() + c] = mod_data()[i * cols_ + cols[c]];
      else
        r.rat_data()[i * cols.size() + c] = rat_data()[i * cols_ + cols[c]];
    }
  return r;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix r(field_, rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw ShapeMismatch("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime_field())
        r.mod_data()[k * cols_ + j] = mod_data()[rows[k] * cols_ + j];
      else
        r.rat_data()[k * cols_ + j] = rat_data()[rows[k] * cols_ + j];
    }
  }
  return r;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  std::vector<std::size_t> idx(count);
  for (std::size_t c = 0; c < count; ++c) idx[c] = first + c;
  return select_columns(idx);
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks, Field f, std::size_t rows) {
  std::size_t cols = 0;
  for (auto& b : blocks) {
    if (b.rows() != rows) throw ShapeMismatch("hstack row mismatch");
    cols += b.cols();
  }
  Matrix r(f, rows, cols);
  std::size_t off = 0;
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (f.is_prime_field())
          r.mod_data()[i * cols + off + j] = b.mod_data()[i * b.cols() + j];
        else
          r.rat_data()[i * cols + off + j] = b.rat_data()[i * b.cols() + j];
      }
    off += b.cols();
  }
  return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks, Field f, std::size_t cols) {
  std::size_t rows = 0;
  for (auto& b : blocks) {
    if (b.cols() != cols) throw ShapeMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Matrix r(f, rows, cols);
  std::size_t off = 0;
  for (auto& b : blocks) {
    if (f.is_prime_field())
      std::copy(b.mod_data().begin(), b.mod_data().end(), r.mod_data().begin() + std::ptrdiff_t(off * cols));
    else
      std::copy(b.rat_data().begin(), b.rat_data().end(), r.rat_data().begin() + std::ptrdiff_t(off * cols));
    off += b.rows();
  }
  return r;
}

Matrix Matrix::flatten() const {
  Matrix r(field_, rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) {
      if (field_.is_prime_field())
        r.mod_data()[j * rows_ + i] = mod_data()[i * cols_ + j];
      else
        r.rat_data()[j * rows_ + i] = rat_data()[i * cols_ + j];
    }
  return r;
}

Matrix Matrix::reshape(std::size_t rows, std::size_t cols) const {
  if (rows * cols != rows_ * cols_) throw ShapeMismatch("reshape size mismatch");
  Matrix r(field_, rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      if (field_.is_prime_field())
        r.mod_data()[i * cols + j] = mod_data()[j * rows + i];
      else
        r.rat_data()[i * cols + j] = rat_data()[j * rows + i];
    }
  return r;
}

std::size_t Matrix::rank() const { return rref(*this).pivot_cols.size(); }

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw ShapeMismatch("kron over different fields");
  const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  Matrix r(a.field(), ar * br, ac * bc);
  const std::size_t rc = ac * bc;
  if (a.field().is_prime_field()) {
    auto p = std::uint32_t(a.field().characteristic());
    const auto& ad = a.mod_data();
    const auto& bd = b.mod_data();
    auto& rd = r.mod_data();
    for (std::size_t i = 0; i < ar; ++i)
      for (std::size_t j = 0; j < ac; ++j) {
        std::uint32_t x = ad[i * ac + j];
        if (x == 0) continue;
        for (std::size_t k = 0; k < br; ++k)
          for (std::size_t l = 0; l < bc; ++l)
            rd[(i * br + k) * rc + j * bc + l] = modp::mul(x, bd[k * bc + l], p);
      }
  } else {
    const auto& ad = a.rat_data();
    const auto& bd = b.rat_data();
    auto& rd = r.rat_data();
    for (std::size_t i = 0; i < ar; ++i)
      for (std::size_t j = 0; j < ac; ++j) {
        const mpq_class& x = ad[i * ac + j];
        if (x == 0) continue;
        for (std::size_t k = 0; k < br; ++k)
          for (std::size_t l = 0; l < bc; ++l) rd[(i * br + k) * rc + j * bc + l] = x * bd[k * bc + l];
      }
  }
  return r;
}

Matrix kron(const std::vector<Matrix>& factors, Field f) {
  Matrix r = Matrix::identity(f, 1);
  for (auto& m : factors) r = kron(r, m);
  return r;
}

RrefResult rref(const Matrix& m) {
  if (m.rows() * m.rows() * m.cols() >= kernels::kParallelThreshold) return kernels::rref_parallel(m);
  return kernels::rref_serial(m);
}

Matrix kernel(const Matrix& m) {
  auto [red, piv] = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    k.set(free_cols[t], t, Scalar(f, 1L));
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!red.is_zero_at(r, free_cols[t])) k.set(piv[r], t, -red.at(r, free_cols[t]));
  }
  return k;
}

Matrix column_space(const Matrix& m) { return m.select_columns(rref(m).pivot_cols); }

SplitIdempotent solve_right_inverse_on_image(const Matrix& e, PivotPreference pref) {
  if (e.rows() != e.cols()) throw NotIdempotent("idempotent must be square");
  if (e * e != e) throw NotIdempotent("matrix is not idempotent");
  const std::size_t n = e.rows();
  const Field f = e.field();
  if (e.is_identity()) return {n, n, Matrix::identity(f, n), Matrix::identity(f, n)};
  // Column-rank factorization e = C * R where C holds the pivot columns of e
  // and R the nonzero rows of its reduced form; R * C = 1 because the pivot
  // columns of R are unit vectors.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = pref == PivotPreference::Leftmost ? i : n - 1 - i;
  Matrix permuted = e.select_columns(order);
  auto [red, piv] = rref(permuted);
  const std::size_t r = piv.size();
  std::vector<std::size_t> cols(r), rows(r);
  for (std::size_t t = 0; t < r; ++t) {
    cols[t] = order[piv[t]];
    rows[t] = t;
  }
  Matrix incl = e.select_columns(cols);
  Matrix proj_perm = red.select_rows(rows);
  Matrix proj(f, r, n);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t j = 0; j < n; ++j)
      if (!proj_perm.is_zero_at(t, j)) proj.set(t, order[j], proj_perm.at(t, j));
  return {n, r, std::move(proj), std::move(incl)};
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DataError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto [red, piv] = rref(Matrix::hstack({m, Matrix::identity(m.field(), n)}, m.field(), n));
  if (piv.size() < n || piv[n - 1] != n - 1) throw DataError("matrix is singular");
  return red.column_block(n, n);
}

}  // namespace wentw

namespace wentw {

Matrix swap_factors(Field f, std::size_t da, std::size_t db) {
  Matrix s(f, da * db, da * db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b) s.set(b * da + a, a * db + b, Scalar(f, 1L));
  return s;
}

}  // namespace wentw

namespace wentw {

Matrix left_inverse(const Matrix& m) {
  const Field f = m.field();
  if (m.cols() == 0) return Matrix(f, 0, m.rows());
  auto r = rref(m.transpose());
  if (r.pivot_cols.size() != m.cols()) throw DataError("left_inverse: matrix is not injective");
  Matrix inv = inverse(m.select_rows(r.pivot_cols));
  Matrix l(f, m.cols(), m.rows());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
      if (!inv.is_zero_at(i, t)) l.set(i, r.pivot_cols[t], inv.at(i, t));
  return l;
}

}  // namespace wentw
