#include "wentw/emcat.hpp"

#include <map>

namespace wentw {

namespace {

Word k_word(const BimodulePtr& m) { return identity_word(m->left); }

}  // namespace

WeakEntwinedModule make_entwined_module(WeakEntwiningPtr we, std::string name, BimodulePtr carrier, Matrix action,
                                        Matrix coaction) {
  if (!same_algebra(*carrier->right, *we->base))
    throw BaseMismatch("module '" + name + "' is not over the base of entwining '" + we->name + "'");
  Word M = word_of({carrier});
  Cell a = make_cell(M + we->T(), M, std::move(action));
  Cell k = make_cell(M, M + we->C(), std::move(coaction));
  return WeakEntwinedModule{std::move(we), std::move(name), std::move(carrier), std::move(a), std::move(k)};
}

Report check_weak_entwined_module(const WeakEntwinedModule& x) {
  Report r;
  r.title = "weak entwined module " + x.name;
  r.absorb(check_module(x.as_module()), "module.");
  r.absorb(check_comodule(x.as_comodule()), "comodule.");
  const WeakEntwining& we = *x.we;
  const Word M = word_of({x.carrier}), one = we.one(), k = k_word(x.carrier);
  r.expect_equal("compatibility", compose(x.coaction, x.action).mat,
                 compose({whisker(k, x.action, we.C()), whisker(M, we.psi, one), whisker(k, x.coaction, we.T())}).mat);
  return r;
}

BimodulePtr as_t_bimodule(const RightModule& m) {
  const Field f = m.carrier->field();
  const AlgebraPtr& ta = m.ring->algebra;
  auto pmt = present(word_of({m.carrier, m.ring->carrier}));
  std::vector<Matrix> rights;
  for (std::size_t j = 0; j < ta->dim; ++j)
    rights.push_back(m.action.mat *
                     pmt->to_quotient(kron(Matrix::identity(f, m.carrier->dim), Matrix::unit_column(f, ta->dim, j))));
  return make_bimodule(m.carrier->name + "_T", m.carrier->left, ta, m.carrier->dim, m.carrier->left_action,
                       std::move(rights));
}

Matrix comparison_map(const LiftedCoring& lc, const RightModule& m, const BimodulePtr& m_over_t) {
  const Field f = m.carrier->field();
  const WeakEntwining& we = *lc.we;
  const Word M = word_of({m.carrier});
  auto ptc = present(lc.image.ambient());
  auto pmtc = present(M + we.T() + we.C());
  Matrix spread = kron(Matrix::identity(f, m.carrier->dim), ptc->to_ambient(lc.image.incl()));
  Matrix act = whisker(k_word(m.carrier), m.action, we.C()).mat;
  return descend_source(word_of({m_over_t, lc.image.carrier}), act * pmtc->to_quotient(spread));
}

LiftedComoduleStructure kappa_to_xi(const LiftedCoringPtr& lc, const WeakEntwinedModule& x) {
  if (lc->we.get() != x.we.get()) throw BaseMismatch("kappa_to_xi: module over a different entwining");
  RightModule mod = x.as_module();
  BimodulePtr mt = as_t_bimodule(mod);
  Matrix j = comparison_map(*lc, mod, mt);
  Matrix xi = left_inverse(j) * x.coaction.mat;
  if (j * xi != x.coaction.mat) throw NotWellDefined("coaction of '" + x.name + "' leaves the lifted image");
  return LiftedComoduleStructure{lc, x.name, mod, make_comodule(lc->coring, mt, xi)};
}

WeakEntwinedModule xi_to_kappa(const LiftedComoduleStructure& y) {
  Matrix j = comparison_map(*y.lifted, y.module, y.comodule.carrier);
  return make_entwined_module(y.lifted->we, y.name, y.module.carrier, y.module.action.mat, j * y.comodule.coaction.mat);
}

Report check_lifted_comodule(const LiftedComoduleStructure& y) {
  Report r;
  r.title = "lifted comodule " + y.name;
  r.absorb(check_module(y.module), "module.");
  r.absorb(check_comodule(y.comodule), "comodule.");
  auto target = present(word_of({y.comodule.carrier, y.lifted->coring->carrier}))->quotient;
  r.expect("xi_t_linear", is_intertwiner(*y.comodule.carrier, *target, y.comodule.coaction.mat));
  return r;
}

LiftedMonadAlgebra to_lifted_monad_algebra(const WeakEntwinedModule& x) {
  LiftedMonadObject o = lift_monad_on(x.we, x.as_comodule());
  Matrix a = x.action.mat * o.split.incl;
  return LiftedMonadAlgebra{x.name, std::move(o), std::move(a)};
}

WeakEntwinedModule from_lifted_monad_algebra(const LiftedMonadAlgebra& a) {
  const RightComodule& m = a.object.comodule;
  return make_entwined_module(a.object.we, a.name, m.carrier, a.action * a.object.split.proj, m.coaction.mat);
}

Report check_lifted_monad_algebra(const LiftedMonadAlgebra& a) {
  Report r;
  r.title = "lifted monad algebra " + a.name;
  const LiftedMonadObject& o = a.object;
  r.absorb(check_comodule(o.comodule), "comodule.");
  r.absorb(check_lifted_monad_at(o), "monad.");
  LiftedMonadObject o2 = lift_monad_on(o.we, o.image);
  Matrix mult = lifted_monad_mult(o2, o);
  r.expect_equal("unit", a.action * o.unit, Matrix::identity(o.we->base->field, o.comodule.carrier->dim));
  r.expect_equal("associativity", a.action * mult, a.action * lifted_monad_map(o2, o, a.action));
  Cell ac{word_of({o.image.carrier}), word_of({o.comodule.carrier}), a.action};
  r.expect_equal("colinear", o.comodule.coaction.mat * a.action,
                 whisker(k_word(o.comodule.carrier), ac, o.we->C()).mat * o.image.coaction.mat);
  return r;
}

std::vector<Matrix> entwined_hom_space(const WeakEntwinedModule& x, const WeakEntwinedModule& y) {
  if (x.we.get() != y.we.get()) throw BaseMismatch("entwined_hom_space: modules over different entwinings");
  const Field f = x.carrier->field();
  const Word T = x.we->T(), C = x.we->C();
  auto residual = [&](const Matrix& h) {
    Matrix mod = y.action.mat * whisker_right_unchecked(x.carrier, y.carrier, h, T) - h * x.action.mat;
    Matrix com = y.coaction.mat * h - whisker_right_unchecked(x.carrier, y.carrier, h, C) * x.coaction.mat;
    return Matrix::vstack({bimodule_residual(*x.carrier, *y.carrier, h), mod.flatten(), com.flatten()}, f, 1);
  };
  return solve_linear_maps(f, y.carrier->dim, x.carrier->dim, residual);
}

std::vector<Matrix> lifted_comodule_hom_space(const LiftedComoduleStructure& x, const LiftedComoduleStructure& y) {
  return comodule_hom_space(x.comodule, y.comodule);
}

std::vector<Matrix> lifted_monad_hom_space(const LiftedMonadAlgebra& x, const LiftedMonadAlgebra& y) {
  const RightComodule &m = x.object.comodule, &n = y.object.comodule;
  if (m.coring.get() != n.coring.get()) throw BaseMismatch("lifted_monad_hom_space: different corings");
  const Field f = m.carrier->field();
  const Word T = x.object.we->T(), C = x.object.we->C();
  auto residual = [&](const Matrix& h) {
    Matrix com = n.coaction.mat * h - whisker_right_unchecked(m.carrier, n.carrier, h, C) * m.coaction.mat;
    Matrix th = y.object.split.proj * whisker_right_unchecked(m.carrier, n.carrier, h, T) * x.object.split.incl;
    Matrix alg = y.action * th - h * x.action;
    return Matrix::vstack({bimodule_residual(*m.carrier, *n.carrier, h), com.flatten(), alg.flatten()}, f, 1);
  };
  return solve_linear_maps(f, n.carrier->dim, m.carrier->dim, residual);
}

namespace {

bool in_span(const std::vector<Matrix>& basis, const Matrix& v, Field f) {
  if (basis.empty()) return v.is_zero();
  std::vector<Matrix> cols;
  for (auto& b : basis) cols.push_back(b.flatten());
  Matrix span = Matrix::hstack(cols, f, cols[0].rows());
  cols.push_back(v.flatten());
  return Matrix::hstack(cols, f, cols[0].rows()).rank() == span.rank();
}

}  // namespace

Report verify_em_equivalence(const WeakEntwiningPtr& we, const std::vector<WeakEntwinedModule>& objects,
                             const std::vector<std::pair<std::string, std::string>>& pairs, PivotPreference pref) {
  Report r;
  r.title = "Eilenberg-Moore equivalence for " + we->name;
  const Field f = we->base->field;
  auto lc = std::make_shared<const LiftedCoring>(lift_comonad(we, pref));
  r.add_constant("lifted_coring_dim", static_cast<long long>(lc->image.carrier->dim));
  std::map<std::string, std::size_t> index;
  std::vector<LiftedComoduleStructure> xis;
  std::vector<LiftedMonadAlgebra> algs;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const WeakEntwinedModule& x = objects[i];
    index[x.name] = i;
    const std::string p = "object." + x.name + ".";
    Report base = check_weak_entwined_module(x);
    r.absorb(base, p + "entwined.");
    LiftedComoduleStructure y = kappa_to_xi(lc, x);
    r.absorb(check_lifted_comodule(y), p + "comodule_side.");
    WeakEntwinedModule back = xi_to_kappa(y);
    r.expect_equal(p + "kappa_round_trip", back.coaction.mat, x.coaction.mat);
    r.expect_equal(p + "xi_round_trip", kappa_to_xi(lc, back).comodule.coaction.mat, y.comodule.coaction.mat);
    LiftedMonadAlgebra a = to_lifted_monad_algebra(x);
    r.absorb(check_lifted_monad_algebra(a), p + "monad_side.");
    WeakEntwinedModule back2 = from_lifted_monad_algebra(a);
    r.expect_equal(p + "rho_round_trip", back2.action.mat, x.action.mat);
    r.expect_equal(p + "algebra_round_trip", to_lifted_monad_algebra(back2).action, a.action);
    xis.push_back(std::move(y));
    algs.push_back(std::move(a));
  }
  for (auto& [a, b] : pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) throw DataError("pair (" + a + ", " + b + ") names an unknown module");
    const std::string p = "hom." + a + "." + b + ".";
    auto ent = entwined_hom_space(objects[ia->second], objects[ib->second]);
    auto com = lifted_comodule_hom_space(xis[ia->second], xis[ib->second]);
    auto mon = lifted_monad_hom_space(algs[ia->second], algs[ib->second]);
    r.add_constant(p + "entwined", static_cast<long long>(ent.size()));
    r.add_constant(p + "comodule", static_cast<long long>(com.size()));
    r.add_constant(p + "monad", static_cast<long long>(mon.size()));
    r.expect(p + "dims_equal", ent.size() == com.size() && com.size() == mon.size(),
             std::to_string(ent.size()) + "/" + std::to_string(com.size()) + "/" + std::to_string(mon.size()));
    bool transfer = true;
    for (auto& h : ent) transfer = transfer && in_span(com, h, f) && in_span(mon, h, f);
    r.expect(p + "morphisms_transfer", transfer);
  }
  return r;
}

}  // namespace wentw
