#include "wentw/tensor.hpp"

#include <map>
#include <mutex>

namespace wentw {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// sect * x: row k of x lands on row free_coords[k].
Matrix section_rows(const TensorOverR& t, const Matrix& x) {
  if (t.trivial) return x;
  Matrix r(x.field(), t.ambient_dim, x.cols());
  for (std::size_t k = 0; k < t.free_coords.size(); ++k)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!x.is_zero_at(k, j)) r.set(t.free_coords[k], j, x.at(k, j));
  return r;
}

Matrix project(const TensorOverR& t, const Matrix& x) { return t.trivial ? x : t.proj * x; }

std::size_t factor_product(const std::vector<BimodulePtr>& fs, std::size_t from, std::size_t to) {
  std::size_t d = 1;
  for (std::size_t i = from; i < to; ++i) d *= fs[i]->dim;
  return d;
}

bool in_span(const Matrix& basis_cols, const Matrix& v, Field f) {
  if (basis_cols.cols() == 0) return v.is_zero();
  return Matrix::hstack({basis_cols, v}, f, v.rows()).rank() == basis_cols.rank();
}

TensorPtr build_presentation(const Word& w) {
  auto t = std::make_shared<TensorOverR>();
  t->word = w;
  const Field f = w.field();
  if (w.empty()) {
    t->ambient_dim = w.base->dim;
    t->proj = Matrix::identity(f, t->ambient_dim);
    for (std::size_t i = 0; i < t->ambient_dim; ++i) t->free_coords.push_back(i);
    t->quotient = unit_bimodule(w.base);
    return t;
  }
  const auto& fs = w.factors;
  const std::size_t n = fs.size();
  t->ambient_dim = factor_product(fs, 0, n);
  std::vector<Matrix> relation_rows;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Algebra& base = *fs[p]->right;
    const std::size_t before = factor_product(fs, 0, p), after = factor_product(fs, p + 2, n);
    const std::size_t dl = fs[p]->dim, dr = fs[p + 1]->dim;
    for (std::size_t r : algebra_generators(base)) {
      Matrix d = kron(fs[p]->right_action[r], Matrix::identity(f, dr)) -
                 kron(Matrix::identity(f, dl), fs[p + 1]->left_action[r]);
      if (d.is_zero()) continue;
      Matrix rel = kron(kron(Matrix::identity(f, before), d), Matrix::identity(f, after));
      relation_rows.push_back(rel.transpose());
    }
  }
  std::vector<std::size_t> pivots;
  Matrix reduced;
  if (!relation_rows.empty()) {
    auto rr = rref(Matrix::vstack(relation_rows, f, t->ambient_dim));
    reduced = std::move(rr.reduced);
    pivots = std::move(rr.pivot_cols);
  }
  t->trivial = pivots.empty();
  std::vector<bool> is_pivot(t->ambient_dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < t->ambient_dim; ++c)
    if (!is_pivot[c]) t->free_coords.push_back(c);
  const std::size_t q = t->free_coords.size();
  t->proj = Matrix(f, q, t->ambient_dim);
  for (std::size_t k = 0; k < q; ++k) t->proj.set(k, t->free_coords[k], Scalar(f, 1L));
  for (std::size_t row = 0; row < pivots.size(); ++row)
    for (std::size_t k = 0; k < q; ++k)
      if (!reduced.is_zero_at(row, t->free_coords[k])) t->proj.set(k, pivots[row], -reduced.at(row, t->free_coords[k]));
  if (n == 1) {
    t->quotient = fs[0];
    return t;
  }
  std::vector<Matrix> left, right;
  const std::size_t rest_l = factor_product(fs, 1, n), rest_r = factor_product(fs, 0, n - 1);
  for (auto& a : fs.front()->left_action)
    left.push_back(project(*t, t->after_section(kron(a, Matrix::identity(f, rest_l)))));
  for (auto& a : fs.back()->right_action)
    right.push_back(project(*t, t->after_section(kron(Matrix::identity(f, rest_r), a))));
  t->quotient = make_bimodule(w.to_string(), w.left(), w.right(), q, std::move(left), std::move(right));
  return t;
}

}  // namespace

BimodulePtr unit_bimodule(const AlgebraPtr& r) {
  static std::map<const Algebra*, std::pair<AlgebraPtr, BimodulePtr>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(r.get());
  if (it != cache.end()) return it->second.second;
  auto b = regular_bimodule(r);
  cache.emplace(r.get(), std::make_pair(r, b));
  return b;
}

std::size_t Word::ambient_dim() const { return empty() ? base->dim : factor_product(factors, 0, factors.size()); }

std::string Word::to_string() const {
  if (empty()) return "1[" + base->name + "]";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "(x)";
    s += factors[i]->name;
  }
  return s;
}

bool Word::operator==(const Word& o) const {
  if (factors.size() != o.factors.size()) return false;
  if (empty()) return same_algebra(*base, *o.base);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].get() != o.factors[i].get()) return false;
  return true;
}

Word word_of(std::vector<BimodulePtr> factors) {
  if (factors.empty()) throw DataError("word_of: use identity_word for the empty word");
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (!same_algebra(*factors[i]->right, *factors[i + 1]->left))
      throw BaseMismatch("cannot tensor '" + factors[i]->name + "' with '" + factors[i + 1]->name +
                         "' over different algebras");
  AlgebraPtr base = factors.front()->left;
  return Word{std::move(base), std::move(factors)};
}

Word identity_word(const AlgebraPtr& base) { return Word{base, {}}; }

Word concat(const Word& a, const Word& b) {
  if (!same_algebra(*a.right(), *b.left()))
    throw BaseMismatch("cannot concatenate " + a.to_string() + " and " + b.to_string());
  if (a.empty()) return b;
  if (b.empty()) return a;
  Word r = a;
  r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
  return r;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

Matrix TensorOverR::sect() const {
  Matrix s(proj.field(), ambient_dim, free_coords.size());
  for (std::size_t k = 0; k < free_coords.size(); ++k) s.set(free_coords[k], k, Scalar(proj.field(), 1L));
  return s;
}

Matrix TensorOverR::to_quotient(const Matrix& x) const { return project(*this, x); }

Matrix TensorOverR::to_ambient(const Matrix& x) const { return section_rows(*this, x); }

Matrix TensorOverR::after_section(const Matrix& a) const { return trivial ? a : a.select_columns(free_coords); }

TensorPtr present(const Word& w) {
  static std::map<std::vector<const void*>, TensorPtr> cache;
  std::vector<const void*> key;
  if (w.empty())
    key.push_back(w.base.get());
  else {
    key.push_back(nullptr);
    for (auto& f : w.factors) key.push_back(f.get());
  }
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TensorPtr t = build_presentation(w);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(std::move(key), t).first->second;
}

TensorPtr tensor_over_R(const BimodulePtr& v, const BimodulePtr& w) { return present(word_of({v, w})); }

std::vector<std::size_t> algebra_generators(const Algebra& a) {
  const Field f = a.field;
  std::vector<std::size_t> gens;
  Matrix span = column_space(a.unit);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Matrix ei = Matrix::unit_column(f, a.dim, i);
    if (in_span(span, ei, f)) continue;
    gens.push_back(i);
    // Close the span under right multiplication by generators.
    bool grew = true;
    span = column_space(Matrix::hstack({span, ei}, f, a.dim));
    while (grew) {
      grew = false;
      std::vector<Matrix> blocks{span};
      for (std::size_t c = 0; c < span.cols(); ++c)
        for (auto g : gens) blocks.push_back(a.product(span.column(c), Matrix::unit_column(f, a.dim, g)));
      Matrix next = column_space(Matrix::hstack(blocks, f, a.dim));
      if (next.cols() > span.cols()) {
        span = next;
        grew = true;
      }
    }
  }
  return gens;
}

Cell make_cell(Word source, Word target, Matrix mat) {
  auto ps = present(source);
  auto pt = present(target);
  if (mat.rows() != pt->dim() || mat.cols() != ps->dim())
    throw ShapeMismatch("cell " + source.to_string() + " -> " + target.to_string() + " must be " +
                        std::to_string(pt->dim()) + "x" + std::to_string(ps->dim()) + ", got " +
                        std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
  return Cell{std::move(source), std::move(target), std::move(mat)};
}

Cell identity_cell(const Word& w) { return Cell{w, w, Matrix::identity(w.field(), present(w)->dim())}; }

Cell zero_cell(const Word& source, const Word& target) {
  return Cell{source, target, Matrix(source.field(), present(target)->dim(), present(source)->dim())};
}

Cell compose(const Cell& outer, const Cell& inner) {
  if (!(outer.source == inner.target))
    throw ShapeMismatch("cannot compose " + outer.source.to_string() + "->" + outer.target.to_string() + " after " +
                        inner.source.to_string() + "->" + inner.target.to_string());
  return Cell{inner.source, outer.target, outer.mat * inner.mat};
}

Cell compose(std::initializer_list<Cell> chain) {
  auto it = chain.end();
  Cell acc = *--it;
  while (it != chain.begin()) acc = compose(*--it, acc);
  return acc;
}

Matrix lift(const Cell& c) {
  auto ps = present(c.source);
  auto pt = present(c.target);
  return section_rows(*pt, ps->trivial ? c.mat : c.mat * ps->proj);
}

Cell descend(const Word& source, const Word& target, const Matrix& ambient_map, bool verify) {
  auto ps = present(source);
  auto pt = present(target);
  if (ambient_map.rows() != pt->ambient_dim || ambient_map.cols() != ps->ambient_dim)
    throw ShapeMismatch("ambient map has wrong shape for " + source.to_string() + " -> " + target.to_string());
  Matrix pa = project(*pt, ambient_map);
  Matrix m = ps->after_section(pa);
  if (verify && !ps->trivial) {
    if (pa != m * ps->proj)
      throw NotWellDefined("map " + source.to_string() + " -> " + target.to_string() +
                           " does not respect the balancing relations");
  }
  return Cell{source, target, std::move(m)};
}

Cell whisker(const Word& left, const Cell& f, const Word& right, bool verify) {
  if (left.empty() && right.empty()) {
    if (!same_algebra(*left.base, *f.source.left()) || !same_algebra(*right.base, *f.source.right()))
      throw BaseMismatch("whisker: identity words over the wrong base");
    return f;
  }
  const Field fld = f.mat.field();
  Word src = concat(left, f.source, right);
  Word tgt = concat(left, f.target, right);
  const std::size_t dl = left.empty() ? 1 : left.ambient_dim();
  const std::size_t dr = right.empty() ? 1 : right.ambient_dim();
  Matrix a = kron(kron(Matrix::identity(fld, dl), lift(f)), Matrix::identity(fld, dr));
  if (f.source.empty()) {
    const AlgebraPtr& base = f.source.base;
    a = a * kron(kron(Matrix::identity(fld, dl), base->unit), Matrix::identity(fld, dr));
  }
  if (f.target.empty()) {
    Matrix merge;
    if (!left.empty()) {
      const auto& last = left.factors.back();
      merge = kron(kron(Matrix::identity(fld, dl / last->dim), last->right_action_ambient()), Matrix::identity(fld, dr));
    } else {
      const auto& first = right.factors.front();
      merge = kron(first->left_action_ambient(), Matrix::identity(fld, dr / first->dim));
    }
    a = merge * a;
  }
  return descend(src, tgt, a, verify);
}

bool is_bimodule_cell(const Cell& c) {
  return is_intertwiner(*present(c.source)->quotient, *present(c.target)->quotient, c.mat);
}

BimoduleMap as_bimodule_map(const Cell& c) { return {present(c.source)->quotient, present(c.target)->quotient, c.mat}; }

BimoduleMap tensor_maps(const BimoduleMap& f, const BimoduleMap& g) {
  Word src = word_of({f.source, g.source});
  Word tgt = word_of({f.target, g.target});
  Cell c = descend(src, tgt, kron(f.mat, g.mat));
  return as_bimodule_map(c);
}

Iso associator(const BimodulePtr& u, const BimodulePtr& v, const BimodulePtr& w) {
  auto uv = tensor_over_R(u, v);
  auto vw = tensor_over_R(v, w);
  auto left = tensor_over_R(uv->quotient, w);
  auto right = tensor_over_R(u, vw->quotient);
  const Field f = u->field();
  const std::size_t dw = w->dim, dv = v->dim, dvw = vw->dim();
  const Matrix proj_vw = vw->trivial ? Matrix::identity(f, vw->ambient_dim) : vw->proj;
  const Matrix proj_uv = uv->trivial ? Matrix::identity(f, uv->ambient_dim) : uv->proj;
  // Each quotient basis vector has a single-coordinate section representative.
  std::vector<Matrix> fwd, bwd;
  for (std::size_t k = 0; k < left->dim(); ++k) {
    const std::size_t amb = left->free_coords[k];
    const std::size_t i = amb / dw, c = amb % dw;
    const std::size_t uvamb = uv->free_coords[i];
    const std::size_t a = uvamb / dv, b = uvamb % dv;
    Matrix x = kron(Matrix::unit_column(f, u->dim, a), proj_vw.column(b * dw + c));
    fwd.push_back(project(*right, x));
  }
  for (std::size_t k = 0; k < right->dim(); ++k) {
    const std::size_t amb = right->free_coords[k];
    const std::size_t a = amb / dvw, j = amb % dvw;
    const std::size_t vwamb = vw->free_coords[j];
    const std::size_t b = vwamb / dw, c = vwamb % dw;
    Matrix x = kron(proj_uv.column(a * dv + b), Matrix::unit_column(f, dw, c));
    bwd.push_back(project(*left, x));
  }
  Iso iso{Matrix::hstack(fwd, f, right->dim()), Matrix::hstack(bwd, f, left->dim())};
  if (!(iso.forward * iso.backward).is_identity() || !(iso.backward * iso.forward).is_identity())
    throw NotWellDefined("associator for " + u->name + ", " + v->name + ", " + w->name + " is not invertible");
  return iso;
}

Matrix descend_source(const Word& source, const Matrix& map) {
  auto ps = present(source);
  if (map.cols() != ps->ambient_dim) throw ShapeMismatch("descend_source: wrong ambient width for " + source.to_string());
  Matrix m = ps->after_section(map);
  if (!ps->trivial && map != m * ps->proj)
    throw NotWellDefined("map out of " + source.to_string() + " does not respect the balancing relations");
  return m;
}

Matrix left_unitor(const BimodulePtr& w) {
  auto t = present(word_of({unit_bimodule(w->left), w}));
  return t->after_section(w->left_action_ambient());
}

Matrix right_unitor(const BimodulePtr& v) {
  auto t = present(word_of({v, unit_bimodule(v->right)}));
  return t->after_section(v->right_action_ambient());
}

}  // namespace wentw
