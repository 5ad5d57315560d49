#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wentw/field.hpp"

namespace wentw {

/// Dense row-major matrix over a Field. Prime-field entries are stored as
/// 32-bit residues, rational entries as GMP rationals.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static Matrix column_vector(const std::vector<Scalar>& entries, Field f);
  /// e_i as a column of length n.
  static Matrix unit_column(Field f, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  bool is_zero_at(std::size_t i, std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  Matrix column(std::size_t j) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  /// Columns [first, first+count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  static Matrix hstack(const std::vector<Matrix>& blocks, Field f, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& blocks, Field f, std::size_t cols);
  /// Entries in column-major order as one column; the inverse of reshape.
  Matrix flatten() const;
  Matrix reshape(std::size_t rows, std::size_t cols) const;

  std::size_t rank() const;

  /// Rows of decimal/rational strings, e.g. [[1, 2], [0, 1]].
  std::string to_string() const;

  std::vector<std::uint32_t>& mod_data() { return std::get<0>(data_); }
  const std::vector<std::uint32_t>& mod_data() const { return std::get<0>(data_); }
  std::vector<mpq_class>& rat_data() { return std::get<1>(data_); }
  const std::vector<mpq_class>& rat_data() const { return std::get<1>(data_); }

 private:
  void require_same_shape(const Matrix& o, const char* what) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> data_;
};

/// Kronecker product, left-factor-major: basis vector (i, j) of V (x) W sits
/// at flat index i * dim(W) + j. Shape is (rows a * rows b) x (cols a * cols b).
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors, Field f);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with leftmost pivots.
RrefResult rref(const Matrix& m);

/// Columns form the canonical null-space basis: one column per free variable,
/// free variables in increasing order, each set to 1.
Matrix kernel(const Matrix& m);

/// Canonical basis of the column space: columns of m at the pivot columns.
Matrix column_space(const Matrix& m);

/// Split of an idempotent e = incl * proj with proj * incl = 1.
struct SplitIdempotent {
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  Matrix proj;  ///< rank x ambient
  Matrix incl;  ///< ambient x rank
};

/// Which pivot columns span the range. Leftmost is the canonical choice; the
/// reversed preference exists to exercise independence of the splitting.
enum class PivotPreference { Leftmost, Rightmost };

/// Splits an idempotent through its range. Throws NotIdempotent if e*e != e.
/// An identity idempotent always gets the trivial split proj = incl = 1.
SplitIdempotent solve_right_inverse_on_image(const Matrix& e,
                                             PivotPreference pref = PivotPreference::Leftmost);

/// Permutation A (x) B -> B (x) A.
Matrix swap_factors(Field f, std::size_t da, std::size_t db);

/// L with L m = 1 for m of full column rank, supported on the pivot rows of
/// m. Throws DataError if m is not injective.
Matrix left_inverse(const Matrix& m);

/// Inverse of a square matrix, or throws DataError if singular.
Matrix inverse(const Matrix& m);

}  // namespace wentw
