#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wentw/matrix.hpp"
#include "wentw/report.hpp"

namespace wentw {

/// Finite-dimensional associative unital algebra given by structure constants.
struct Algebra {
  std::string name;
  Field field = Field::rationals();
  std::size_t dim = 0;
  /// mult: dim x dim^2, column i*dim+j holds the coordinates of e_i e_j.
  Matrix mult;
  /// dim x 1 coordinates of the unit.
  Matrix unit;

  /// x -> e_i x.
  Matrix left_mult(std::size_t i) const;
  /// x -> x e_i.
  Matrix right_mult(std::size_t i) const;
  /// Product of two coordinate columns.
  Matrix product(const Matrix& a, const Matrix& b) const;
};
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Shapes are validated; axioms are not (see check_algebra).
AlgebraPtr make_algebra(std::string name, Field f, Matrix mult, Matrix unit);
/// The ground field as a 1-dimensional algebra.
AlgebraPtr ground_algebra(Field f);
bool same_algebra(const Algebra& a, const Algebra& b);
bool is_ground(const Algebra& a);

/// Associativity over all basis triples and both unit laws. Witness indices
/// are flat (i*dim + j)*dim + k for associativity and i for the unit laws.
Report check_algebra(const Algebra& a);

/// A left-R, right-R' bimodule V with action matrices per basis element.
struct Bimodule {
  std::string name;
  AlgebraPtr left;
  AlgebraPtr right;
  std::size_t dim = 0;
  std::vector<Matrix> left_action;   ///< v -> r_i v
  std::vector<Matrix> right_action;  ///< v -> v s_j

  const Field& field() const { return left->field; }
  /// dim x (dim R * dim): r (x) v -> r v.
  Matrix left_action_ambient() const;
  /// dim x (dim * dim R'): v (x) s -> v s.
  Matrix right_action_ambient() const;
};
using BimodulePtr = std::shared_ptr<const Bimodule>;

BimodulePtr make_bimodule(std::string name, AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                          std::vector<Matrix> left_action, std::vector<Matrix> right_action);
/// R as an R-R bimodule.
BimodulePtr regular_bimodule(const AlgebraPtr& r);
/// The same space seen as a k-R' bimodule.
BimodulePtr restrict_left_to_ground(const BimodulePtr& v, std::string name = {});
/// A k-k bimodule of the given dimension.
BimodulePtr vector_space(std::string name, Field f, std::size_t dim);

/// Unital, multiplicative, commuting actions.
Report check_bimodule(const Bimodule& v);

struct BimoduleMap {
  BimodulePtr source;
  BimodulePtr target;
  Matrix mat;  ///< target.dim x source.dim
};

bool is_intertwiner(const Bimodule& source, const Bimodule& target, const Matrix& mat);
/// Throws ShapeMismatch / BaseMismatch for incompatible data.
BimoduleMap make_bimodule_map(BimodulePtr source, BimodulePtr target, Matrix mat);
BimoduleMap identity_map(const BimodulePtr& v);
/// outer o inner.
BimoduleMap compose_maps(const BimoduleMap& outer, const BimoduleMap& inner);

/// Canonical basis of the solution space of a homogeneous linear system in an
/// unknown rows x cols matrix X. `residual` must be linear in X; its
/// flattened value is one block of constraints.
std::vector<Matrix> solve_linear_maps(Field f, std::size_t rows, std::size_t cols,
                                      const std::function<Matrix(const Matrix&)>& residual);

/// Basis of bimodule maps v -> w.
std::vector<BimoduleMap> hom_space(const BimodulePtr& v, const BimodulePtr& w);

/// Linear combination of basis elements of `a` with coefficients `coeffs`.
Matrix combine(const std::vector<Matrix>& basis, const Matrix& coeffs, Field f);

}  // namespace wentw
