#include "wentw/algebra.hpp"

namespace wentw {

Matrix Algebra::left_mult(std::size_t i) const { return mult.column_block(i * dim, dim); }

Matrix Algebra::right_mult(std::size_t i) const {
  std::vector<std::size_t> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) cols[j] = j * dim + i;
  return mult.select_columns(cols);
}

Matrix Algebra::product(const Matrix& a, const Matrix& b) const { return mult * kron(a, b); }

AlgebraPtr make_algebra(std::string name, Field f, Matrix mult, Matrix unit) {
  auto a = std::make_shared<Algebra>();
  a->dim = unit.rows();
  if (unit.cols() != 1 || mult.rows() != a->dim || mult.cols() != a->dim * a->dim)
    throw ShapeMismatch("algebra '" + name + "': mult must be dim x dim^2 and unit dim x 1");
  if (!(mult.field() == f) || !(unit.field() == f)) throw DataError("algebra '" + name + "': field mismatch");
  a->name = std::move(name);
  a->field = f;
  a->mult = std::move(mult);
  a->unit = std::move(unit);
  return a;
}

AlgebraPtr ground_algebra(Field f) {
  return make_algebra("k", f, Matrix::identity(f, 1), Matrix::identity(f, 1));
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  return &a == &b || (a.field == b.field && a.dim == b.dim && a.mult == b.mult && a.unit == b.unit);
}

bool is_ground(const Algebra& a) { return a.dim == 1 && a.unit.at(0, 0).is_one() && a.mult.at(0, 0).is_one(); }

Report check_algebra(const Algebra& a) {
  Report r;
  r.title = "algebra " + a.name;
  const Field f = a.field;
  Matrix id = Matrix::identity(f, a.dim);
  r.expect_equal("associativity", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult));
  r.expect_equal("left_unit", a.mult * kron(a.unit, id), id);
  r.expect_equal("right_unit", a.mult * kron(id, a.unit), id);
  return r;
}

Matrix Bimodule::left_action_ambient() const {
  const std::size_t dr = left->dim;
  Matrix m(field(), dim, dr * dim);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t row = 0; row < dim; ++row)
        if (!left_action[i].is_zero_at(row, v)) m.set(row, i * dim + v, left_action[i].at(row, v));
  return m;
}

Matrix Bimodule::right_action_ambient() const {
  const std::size_t ds = right->dim;
  Matrix m(field(), dim, dim * ds);
  for (std::size_t v = 0; v < dim; ++v)
    for (std::size_t j = 0; j < ds; ++j)
      for (std::size_t row = 0; row < dim; ++row)
        if (!right_action[j].is_zero_at(row, v)) m.set(row, v * ds + j, right_action[j].at(row, v));
  return m;
}

BimodulePtr make_bimodule(std::string name, AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                          std::vector<Matrix> left_action, std::vector<Matrix> right_action) {
  if (!left || !right) throw DataError("bimodule '" + name + "': missing base algebra");
  if (!(left->field == right->field)) throw BaseMismatch("bimodule '" + name + "': bases over different fields");
  if (left_action.size() != left->dim || right_action.size() != right->dim)
    throw ShapeMismatch("bimodule '" + name + "': one action matrix per base basis element required");
  for (auto* acts : {&left_action, &right_action})
    for (auto& m : *acts)
      if (m.rows() != dim || m.cols() != dim || !(m.field() == left->field))
        throw ShapeMismatch("bimodule '" + name + "': action matrices must be dim x dim");
  auto b = std::make_shared<Bimodule>();
  b->name = std::move(name);
  b->left = std::move(left);
  b->right = std::move(right);
  b->dim = dim;
  b->left_action = std::move(left_action);
  b->right_action = std::move(right_action);
  return b;
}

BimodulePtr regular_bimodule(const AlgebraPtr& r) {
  std::vector<Matrix> l, rt;
  for (std::size_t i = 0; i < r->dim; ++i) {
    l.push_back(r->left_mult(i));
    rt.push_back(r->right_mult(i));
  }
  return make_bimodule(r->name, r, r, r->dim, std::move(l), std::move(rt));
}

BimodulePtr restrict_left_to_ground(const BimodulePtr& v, std::string name) {
  auto k = ground_algebra(v->field());
  return make_bimodule(name.empty() ? v->name : std::move(name), k, v->right, v->dim,
                       {Matrix::identity(v->field(), v->dim)}, v->right_action);
}

BimodulePtr vector_space(std::string name, Field f, std::size_t dim) {
  auto k = ground_algebra(f);
  return make_bimodule(std::move(name), k, k, dim, {Matrix::identity(f, dim)}, {Matrix::identity(f, dim)});
}

Report check_bimodule(const Bimodule& v) {
  Report r;
  r.title = "bimodule " + v.name;
  const Field f = v.field();
  Matrix id = Matrix::identity(f, v.dim);
  const Algebra& L = *v.left;
  const Algebra& R = *v.right;
  auto combo = [&](const std::vector<Matrix>& acts, const Matrix& coeffs) { return combine(acts, coeffs, f); };
  r.expect_equal("left_unital", combo(v.left_action, L.unit), id);
  r.expect_equal("right_unital", combo(v.right_action, R.unit), id);
  bool ok = true;
  for (std::size_t i = 0; i < L.dim && ok; ++i)
    for (std::size_t j = 0; j < L.dim && ok; ++j)
      ok = v.left_action[i] * v.left_action[j] == combo(v.left_action, L.mult.column(i * L.dim + j));
  r.expect("left_multiplicative", ok);
  ok = true;
  for (std::size_t i = 0; i < R.dim && ok; ++i)
    for (std::size_t j = 0; j < R.dim && ok; ++j)
      ok = v.right_action[j] * v.right_action[i] == combo(v.right_action, R.mult.column(i * R.dim + j));
  r.expect("right_multiplicative", ok);
  ok = true;
  for (auto& l : v.left_action)
    for (auto& rt : v.right_action) ok = ok && l * rt == rt * l;
  r.expect("actions_commute", ok);
  return r;
}

bool is_intertwiner(const Bimodule& s, const Bimodule& t, const Matrix& mat) {
  if (mat.rows() != t.dim || mat.cols() != s.dim) return false;
  for (std::size_t i = 0; i < s.left_action.size(); ++i)
    if (mat * s.left_action[i] != t.left_action[i] * mat) return false;
  for (std::size_t j = 0; j < s.right_action.size(); ++j)
    if (mat * s.right_action[j] != t.right_action[j] * mat) return false;
  return true;
}

namespace {
void require_same_bases(const Bimodule& s, const Bimodule& t, const std::string& what) {
  if (!same_algebra(*s.left, *t.left) || !same_algebra(*s.right, *t.right))
    throw BaseMismatch(what + ": '" + s.name + "' and '" + t.name + "' have different base algebras");
}
}  // namespace

BimoduleMap make_bimodule_map(BimodulePtr source, BimodulePtr target, Matrix mat) {
  require_same_bases(*source, *target, "bimodule map");
  if (mat.rows() != target->dim || mat.cols() != source->dim)
    throw ShapeMismatch("bimodule map " + source->name + " -> " + target->name + " has wrong shape");
  return {std::move(source), std::move(target), std::move(mat)};
}

BimoduleMap identity_map(const BimodulePtr& v) { return {v, v, Matrix::identity(v->field(), v->dim)}; }

BimoduleMap compose_maps(const BimoduleMap& outer, const BimoduleMap& inner) {
  if (outer.source->dim != inner.target->dim)
    throw ShapeMismatch("compose_maps: " + inner.target->name + " does not feed " + outer.source->name);
  require_same_bases(*inner.target, *outer.source, "compose_maps");
  return {inner.source, outer.target, outer.mat * inner.mat};
}

std::vector<Matrix> solve_linear_maps(Field f, std::size_t rows, std::size_t cols,
                                      const std::function<Matrix(const Matrix&)>& residual) {
  const std::size_t n = rows * cols;
  std::vector<Matrix> columns;
  columns.reserve(n);
  std::size_t height = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    // Column-major enumeration matches Matrix::flatten / reshape.
    Matrix e(f, rows, cols);
    e.set(idx % rows, idx / rows, Scalar(f, 1L));
    Matrix res = residual(e);
    columns.push_back(res.flatten());
    height = columns.back().rows();
  }
  std::vector<Matrix> basis;
  if (n == 0) return basis;
  Matrix constraints = Matrix::hstack(columns, f, height);
  Matrix ker = kernel(constraints);
  for (std::size_t c = 0; c < ker.cols(); ++c) basis.push_back(ker.column(c).reshape(rows, cols));
  return basis;
}

std::vector<BimoduleMap> hom_space(const BimodulePtr& v, const BimodulePtr& w) {
  require_same_bases(*v, *w, "hom_space");
  const Field f = v->field();
  auto residual = [&](const Matrix& x) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < v->left_action.size(); ++i)
      blocks.push_back((x * v->left_action[i] - w->left_action[i] * x).flatten());
    for (std::size_t j = 0; j < v->right_action.size(); ++j)
      blocks.push_back((x * v->right_action[j] - w->right_action[j] * x).flatten());
    return Matrix::vstack(blocks, f, 1);
  };
  std::vector<BimoduleMap> out;
  for (auto& m : solve_linear_maps(f, w->dim, v->dim, residual)) out.push_back({v, w, m});
  return out;
}

Matrix combine(const std::vector<Matrix>& basis, const Matrix& coeffs, Field f) {
  if (basis.empty()) throw ShapeMismatch("combine: empty basis");
  Matrix acc(f, basis[0].rows(), basis[0].cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs.is_zero_at(i, 0)) acc = acc + basis[i].scaled(coeffs.at(i, 0));
  return acc;
}

}  // namespace wentw
