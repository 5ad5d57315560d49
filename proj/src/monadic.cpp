#include "wentw/monadic.hpp"

namespace wentw {

namespace {

AlgebraPtr underlying_algebra(const std::string& name, const BimodulePtr& t, const Cell& mu, const Cell& eta) {
  const Field f = t->field();
  Matrix mult = lift(mu);
  Matrix unit = eta.mat * t->left->unit;
  if (mult.rows() != t->dim || unit.rows() != t->dim) throw ShapeMismatch("ring '" + name + "': bad structure maps");
  return make_algebra(name, f, std::move(mult), std::move(unit));
}

void require_endo(const Bimodule& b, const std::string& what) {
  if (!same_algebra(*b.left, *b.right))
    throw BaseMismatch(what + " '" + b.name + "' must be a bimodule over a single algebra");
}

}  // namespace

RRingPtr make_rring(std::string name, BimodulePtr carrier, Matrix mu, Matrix eta) {
  require_endo(*carrier, "ring carrier");
  auto t = std::make_shared<RRing>();
  t->name = std::move(name);
  t->base = carrier->left;
  t->carrier = carrier;
  Word w = word_of({carrier});
  t->mu = make_cell(word_of({carrier, carrier}), w, std::move(mu));
  t->eta = make_cell(identity_word(t->base), w, std::move(eta));
  t->algebra = underlying_algebra(t->name, carrier, t->mu, t->eta);
  return t;
}

RCoringPtr make_rcoring(std::string name, BimodulePtr carrier, Matrix delta, Matrix eps) {
  require_endo(*carrier, "coring carrier");
  auto c = std::make_shared<RCoring>();
  c->name = std::move(name);
  c->base = carrier->left;
  c->carrier = carrier;
  Word w = word_of({carrier});
  c->delta = make_cell(w, word_of({carrier, carrier}), std::move(delta));
  c->eps = make_cell(w, identity_word(c->base), std::move(eps));
  return c;
}

RRingPtr trivial_rring(const AlgebraPtr& r) {
  auto reg = unit_bimodule(r);
  return make_rring(r->name, reg, left_unitor(reg), Matrix::identity(r->field, r->dim));
}

RCoringPtr trivial_rcoring(const AlgebraPtr& r) {
  auto reg = unit_bimodule(r);
  return make_rcoring(r->name, reg, inverse(left_unitor(reg)), Matrix::identity(r->field, r->dim));
}

namespace {

BimoduleMap as_map(const Cell& c) { return as_bimodule_map(c); }

}  // namespace

Report check_rring(const RRing& t) {
  Report r;
  r.title = "ring " + t.name;
  const BimodulePtr& T = t.carrier;
  r.expect("mu_bimodule_map", is_bimodule_cell(t.mu));
  r.expect("eta_bimodule_map", is_bimodule_cell(t.eta));
  BimoduleMap mu = as_map(t.mu), eta = as_map(t.eta), id = identity_map(T);
  Iso a = associator(T, T, T);
  r.expect_equal("associativity", t.mu.mat * tensor_maps(mu, id).mat,
                 t.mu.mat * tensor_maps(id, mu).mat * a.forward);
  r.expect_equal("left_unit", t.mu.mat * tensor_maps(eta, id).mat, left_unitor(T));
  r.expect_equal("right_unit", t.mu.mat * tensor_maps(id, eta).mat, right_unitor(T));
  return r;
}

Report check_rcoring(const RCoring& c) {
  Report r;
  r.title = "coring " + c.name;
  const BimodulePtr& C = c.carrier;
  r.expect("delta_bimodule_map", is_bimodule_cell(c.delta));
  r.expect("eps_bimodule_map", is_bimodule_cell(c.eps));
  BimoduleMap delta = as_map(c.delta), eps = as_map(c.eps), id = identity_map(C);
  Iso a = associator(C, C, C);
  r.expect_equal("coassociativity", a.forward * tensor_maps(delta, id).mat * c.delta.mat,
                 tensor_maps(id, delta).mat * c.delta.mat);
  Matrix one = Matrix::identity(C->field(), C->dim);
  r.expect_equal("left_counit", left_unitor(C) * tensor_maps(eps, id).mat * c.delta.mat, one);
  r.expect_equal("right_counit", right_unitor(C) * tensor_maps(id, eps).mat * c.delta.mat, one);
  return r;
}

RightModule make_module(RRingPtr ring, BimodulePtr carrier, Matrix action) {
  if (!same_algebra(*carrier->right, *ring->base))
    throw BaseMismatch("module '" + carrier->name + "' is not over the base of ring '" + ring->name + "'");
  Cell a = make_cell(word_of({carrier, ring->carrier}), word_of({carrier}), std::move(action));
  return RightModule{std::move(ring), std::move(carrier), std::move(a)};
}

RightComodule make_comodule(RCoringPtr coring, BimodulePtr carrier, Matrix coaction) {
  if (!same_algebra(*carrier->right, *coring->base))
    throw BaseMismatch("comodule '" + carrier->name + "' is not over the base of coring '" + coring->name + "'");
  Cell k = make_cell(word_of({carrier}), word_of({carrier, coring->carrier}), std::move(coaction));
  return RightComodule{std::move(coring), std::move(carrier), std::move(k)};
}

Report check_module(const RightModule& m) {
  Report r;
  r.title = "module " + m.carrier->name;
  const BimodulePtr &M = m.carrier, &T = m.ring->carrier;
  r.expect("action_bimodule_map", is_bimodule_cell(m.action));
  BimoduleMap act = as_map(m.action), idT = identity_map(T), idM = identity_map(M);
  Iso a = associator(M, T, T);
  r.expect_equal("associativity", m.action.mat * tensor_maps(act, idT).mat,
                 m.action.mat * tensor_maps(idM, as_map(m.ring->mu)).mat * a.forward);
  r.expect_equal("unit", m.action.mat * tensor_maps(idM, as_map(m.ring->eta)).mat, right_unitor(M));
  return r;
}

Report check_comodule(const RightComodule& m) {
  Report r;
  r.title = "comodule " + m.carrier->name;
  const BimodulePtr &M = m.carrier, &C = m.coring->carrier;
  r.expect("coaction_bimodule_map", is_bimodule_cell(m.coaction));
  BimoduleMap co = as_map(m.coaction), idC = identity_map(C), idM = identity_map(M);
  Iso a = associator(M, C, C);
  r.expect_equal("coassociativity", a.forward * tensor_maps(co, idC).mat * m.coaction.mat,
                 tensor_maps(idM, as_map(m.coring->delta)).mat * m.coaction.mat);
  r.expect_equal("counit", right_unitor(M) * tensor_maps(idM, as_map(m.coring->eps)).mat * m.coaction.mat,
                 Matrix::identity(M->field(), M->dim));
  return r;
}

RightModule free_module(const RRingPtr& t, const BimodulePtr& m) {
  auto mt = present(word_of({m, t->carrier}));
  BimodulePtr p = mt->quotient;
  Word M = word_of({m});
  Cell m_mu = whisker(M, t->mu, identity_word(t->base));
  auto mtt = present(word_of({m, t->carrier, t->carrier}));
  Matrix proj = mtt->trivial ? Matrix::identity(m->field(), mtt->ambient_dim) : mtt->proj;
  Matrix amb = m_mu.mat * proj * kron(mt->sect(), Matrix::identity(m->field(), t->carrier->dim));
  return make_module(t, p, descend_source(word_of({p, t->carrier}), amb));
}

RightModule regular_module(const RRingPtr& t) {
  auto carrier = restrict_left_to_ground(t->carrier);
  Matrix mult = lift(t->mu);
  return make_module(t, carrier, descend_source(word_of({carrier, t->carrier}), mult));
}

RightComodule regular_comodule(const RCoringPtr& c) {
  auto carrier = restrict_left_to_ground(c->carrier);
  auto cc = present(word_of({c->carrier, c->carrier}));
  auto kc = present(word_of({carrier, c->carrier}));
  Matrix amb = cc->trivial ? c->delta.mat : cc->sect() * c->delta.mat;
  Matrix co = kc->trivial ? amb : kc->proj * amb;
  return make_comodule(c, carrier, co);
}

Matrix whisker_right_unchecked(const BimodulePtr& m, const BimodulePtr& n, const Matrix& f, const Word& x) {
  Cell c{word_of({m}), word_of({n}), f};
  return whisker(identity_word(m->left), c, x, false).mat;
}

Matrix bimodule_residual(const Bimodule& v, const Bimodule& w, const Matrix& x) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < v.left_action.size(); ++i) blocks.push_back((x * v.left_action[i] - w.left_action[i] * x).flatten());
  for (std::size_t j = 0; j < v.right_action.size(); ++j)
    blocks.push_back((x * v.right_action[j] - w.right_action[j] * x).flatten());
  return Matrix::vstack(blocks, v.field(), 1);
}

std::vector<Matrix> module_hom_space(const RightModule& m, const RightModule& n) {
  if (m.ring.get() != n.ring.get()) throw BaseMismatch("module_hom_space: modules over different rings");
  const Field f = m.carrier->field();
  Word T = m.ring->word();
  auto residual = [&](const Matrix& x) {
    Matrix lhs = n.action.mat * whisker_right_unchecked(m.carrier, n.carrier, x, T);
    Matrix rhs = x * m.action.mat;
    return Matrix::vstack({bimodule_residual(*m.carrier, *n.carrier, x), (lhs - rhs).flatten()}, f, 1);
  };
  return solve_linear_maps(f, n.carrier->dim, m.carrier->dim, residual);
}

std::vector<Matrix> comodule_hom_space(const RightComodule& m, const RightComodule& n) {
  if (m.coring.get() != n.coring.get()) throw BaseMismatch("comodule_hom_space: comodules over different corings");
  const Field f = m.carrier->field();
  Word C = m.coring->word();
  auto residual = [&](const Matrix& x) {
    Matrix lhs = n.coaction.mat * x;
    Matrix rhs = whisker_right_unchecked(m.carrier, n.carrier, x, C) * m.coaction.mat;
    return Matrix::vstack({bimodule_residual(*m.carrier, *n.carrier, x), (lhs - rhs).flatten()}, f, 1);
  };
  return solve_linear_maps(f, n.carrier->dim, m.carrier->dim, residual);
}

}  // namespace wentw
