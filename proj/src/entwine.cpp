#include "wentw/entwine.hpp"

namespace wentw {

namespace {

Cell wk(const Word& l, const Cell& f, const Word& r) { return whisker(l, f, r); }

Cell chain(std::initializer_list<Cell> cells) { return compose(cells); }

}  // namespace

WeakEntwiningPtr make_weak_entwining(std::string name, RRingPtr ring, RCoringPtr coring, Matrix psi) {
  if (!same_algebra(*ring->base, *coring->base))
    throw BaseMismatch("entwining '" + name + "': ring and coring have different bases");
  auto we = std::make_shared<WeakEntwining>();
  we->name = std::move(name);
  we->base = ring->base;
  Word T = ring->word(), C = coring->word();
  we->ring = std::move(ring);
  we->coring = std::move(coring);
  we->psi = make_cell(C + T, T + C, std::move(psi));
  return we;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Strong: return "Strong";
    case Classification::WeakOnly: return "WeakOnly";
    default: return "NotEntwining";
  }
}

std::optional<Classification> parse_classification(const std::string& s) {
  for (auto c : {Classification::Strong, Classification::WeakOnly, Classification::NotEntwining})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::string to_string(Side s) { return s == Side::ComonadSide ? "ComonadSide" : "MonadSide"; }

Report check_weak_entwining(const WeakEntwining& we) {
  Report r;
  r.title = "weak entwining " + we.name;
  Report ring = check_rring(*we.ring), coring = check_rcoring(*we.coring);
  r.absorb(ring, "ring.");
  r.absorb(coring, "coring.");
  r.expect("psi_bimodule_map", is_bimodule_cell(we.psi));
  const Word T = we.T(), C = we.C(), one = we.one();
  const Cell &mu = we.ring->mu, &eta = we.ring->eta, &delta = we.coring->delta, &eps = we.coring->eps,
             &psi = we.psi;
  bool a1 = r.expect_equal("axiom1", chain({psi, wk(C, mu, one)}).mat,
                           chain({wk(one, mu, C), wk(T, psi, one), wk(one, psi, T)}).mat);
  bool a2 = r.expect_equal("axiom2", chain({wk(T, delta, one), psi}).mat,
                           chain({wk(one, psi, C), wk(C, psi, one), wk(one, delta, T)}).mat);
  Cell psi_eta = chain({psi, wk(C, eta, one)});
  bool a3 = r.expect_equal("axiom3", psi_eta.mat,
                           chain({wk(T, eps, C), wk(one, psi, C), wk(C, eta, C), delta}).mat);
  Cell eps_psi = chain({wk(T, eps, one), psi});
  bool a4 = r.expect_equal("axiom4", eps_psi.mat,
                           chain({mu, wk(T, eps, T), wk(one, psi, T), wk(C, eta, T)}).mat);
  bool su = r.expect_equal("strong_unit", psi_eta.mat, wk(one, eta, C).mat);
  bool sc = r.expect_equal("strong_counit", eps_psi.mat, wk(one, eps, T).mat);
  const bool structural = ring.passed() && coring.passed() && r.check_passed("psi_bimodule_map");
  const bool weak = structural && a1 && a2 && a3 && a4;
  if (weak) {
    // Consequences of axioms 1-4: mu is compatible with the comonad-side
    // structure and delta with the monad-side structure.
    r.expect_equal("derived_mu", chain({wk(T, eps, C), wk(one, psi, C), wk(C, mu, C), wk(C + T, psi, one),
                                        wk(C, psi, T), wk(one, delta, T + T)}).mat,
                   chain({psi, wk(C, mu, one)}).mat);
    r.expect_equal("derived_delta", chain({wk(one, mu, C + C), wk(T, psi, C), wk(T + C, psi, one), wk(T, delta, T),
                                           wk(one, psi, T), wk(C, eta, T)}).mat,
                   chain({wk(T, delta, one), psi}).mat);
  }
  Classification c = !weak ? Classification::NotEntwining : (su && sc) ? Classification::Strong : Classification::WeakOnly;
  r.add_label("classification", to_string(c));
  return r;
}

Classification classification_of(const Report& r) {
  auto l = r.label("classification");
  if (!l) throw DataError("report has no classification");
  return *parse_classification(*l);
}

Classification classify(const WeakEntwining& we) { return classification_of(check_weak_entwining(we)); }

std::optional<Classification> mirror_classification(const WeakEntwining& we) {
  if (!is_ground(*we.base)) return std::nullopt;
  const Field f = we.base->field;
  const std::size_t dt = we.ring->carrier->dim, dc = we.coring->carrier->dim;
  auto t_op = make_rring(we.ring->name + "^op", we.ring->carrier, we.ring->mu.mat * swap_factors(f, dt, dt),
                         we.ring->eta.mat);
  auto c_cop = make_rcoring(we.coring->name + "^cop", we.coring->carrier,
                            swap_factors(f, dc, dc) * we.coring->delta.mat, we.coring->eps.mat);
  Matrix s = swap_factors(f, dc, dt);
  auto m = make_weak_entwining(we.name + "^mirror", t_op, c_cop, s * we.psi.mat * s);
  return classify(*m);
}

Cell canonical_endomorphism(const WeakEntwining& we, Side side) {
  const Word T = we.T(), C = we.C(), one = we.one();
  if (side == Side::ComonadSide)
    return chain({wk(one, we.ring->mu, C), wk(T, we.psi, one), wk(T + C, we.ring->eta, one)});
  return chain({wk(C + T, we.coring->eps, one), wk(C, we.psi, one), wk(one, we.coring->delta, T)});
}

CanonicalIdempotent canonical_idempotent(const WeakEntwining& we, Side side) {
  Cell e = canonical_endomorphism(we, side);
  if (e.mat * e.mat != e.mat)
    throw NotIdempotent(to_string(side) + " endomorphism of " + we.name + " is not idempotent");
  return {side, std::move(e)};
}

Report check_mnd_iota_1cell(const MndCell& c) {
  Report r;
  r.title = "monad 1-cell " + c.v.to_string();
  const Word T = c.ring->word(), Tp = c.ring_prime->word();
  const Word one = identity_word(c.ring->base), onep = identity_word(c.ring_prime->base);
  r.expect("psi_bimodule_map", is_bimodule_cell(c.psi));
  r.expect_equal("one_cell", chain({c.psi, wk(c.v, c.ring_prime->mu, onep)}).mat,
                 chain({wk(one, c.ring->mu, c.v), wk(T, c.psi, onep), wk(one, c.psi, Tp)}).mat);
  return r;
}

Report check_mnd_iota_2cell(const MndCell& s, const MndCell& t, const Cell& omega) {
  Report r;
  r.title = "monad 2-cell " + s.v.to_string() + " => " + t.v.to_string();
  if (s.ring.get() != t.ring.get() || s.ring_prime.get() != t.ring_prime.get())
    throw BaseMismatch("2-cell between 1-cells with different rings");
  const Word T = s.ring->word(), Tp = s.ring_prime->word();
  const Word one = identity_word(s.ring->base), onep = identity_word(s.ring_prime->base);
  r.expect("omega_bimodule_map", is_bimodule_cell(omega));
  r.expect_equal("two_cell", chain({wk(T, omega, onep), s.psi}).mat,
                 chain({wk(one, s.ring->mu, t.v), wk(T, t.psi, onep), wk(T, omega, Tp), wk(one, s.psi, Tp),
                        wk(s.v, s.ring_prime->eta, Tp)})
                     .mat);
  return r;
}

Cell mnd_idempotent(const MndCell& c) {
  const Word T = c.ring->word();
  const Word one = identity_word(c.ring->base), onep = identity_word(c.ring_prime->base);
  return chain({wk(one, c.ring->mu, c.v), wk(T, c.psi, onep), wk(T + c.v, c.ring_prime->eta, onep)});
}

MndCell comonad_cell(const WeakEntwining& we) { return MndCell{we.ring, we.ring, we.C(), we.psi}; }

MndCell identity_mnd_cell(const RRingPtr& t) {
  Word one = identity_word(t->base);
  return MndCell{t, t, one, identity_cell(t->word())};
}

EntwOneCell make_entw_1cell(WeakEntwiningPtr source, WeakEntwiningPtr target, BimodulePtr w, Matrix alpha,
                            Matrix beta) {
  if (!same_algebra(*w->left, *source->base) || !same_algebra(*w->right, *target->base))
    throw BaseMismatch("1-cell bimodule '" + w->name + "' does not connect the entwining bases");
  Word W = word_of({w});
  Cell a = make_cell(W + target->T(), source->T() + W, std::move(alpha));
  Cell b = make_cell(source->C() + W, W + target->C(), std::move(beta));
  return EntwOneCell{std::move(source), std::move(target), std::move(w), std::move(a), std::move(b)};
}

EntwOneCell identity_entw_1cell(const WeakEntwiningPtr& we) {
  auto reg = unit_bimodule(we->base);
  const BimodulePtr &t = we->ring->carrier, &c = we->coring->carrier;
  Matrix alpha = inverse(right_unitor(t)) * left_unitor(t);
  Matrix beta = inverse(left_unitor(c)) * right_unitor(c);
  return make_entw_1cell(we, we, reg, std::move(alpha), std::move(beta));
}

Report check_entw_1cell(const EntwOneCell& x) {
  Report r;
  r.title = "entwining 1-cell " + x.w->name;
  const WeakEntwining &s = *x.source, &t = *x.target;
  const Word T = s.T(), C = s.C(), one = s.one();
  const Word Tp = t.T(), Cp = t.C(), onep = t.one();
  const Word W = word_of({x.w});
  r.expect("alpha_bimodule_map", is_bimodule_cell(x.alpha));
  r.expect("beta_bimodule_map", is_bimodule_cell(x.beta));
  r.expect_equal("alpha_mult", chain({x.alpha, wk(W, t.ring->mu, onep)}).mat,
                 chain({wk(one, s.ring->mu, W), wk(T, x.alpha, onep), wk(one, x.alpha, Tp)}).mat);
  r.expect_equal("alpha_unit", chain({x.alpha, wk(W, t.ring->eta, onep)}).mat, wk(one, s.ring->eta, W).mat);
  r.expect_equal("beta_comult", chain({wk(W, t.coring->delta, onep), x.beta}).mat,
                 chain({wk(one, x.beta, Cp), wk(C, x.beta, onep), wk(one, s.coring->delta, W)}).mat);
  r.expect_equal("beta_counit", chain({wk(W, t.coring->eps, onep), x.beta}).mat, wk(one, s.coring->eps, W).mat);
  Matrix rhs = chain({wk(T, x.beta, onep), wk(one, s.psi, W), wk(C, x.alpha, onep)}).mat;
  r.expect_equal("mixed_unit",
                 chain({wk(one, s.ring->mu, W + Cp), wk(T, x.alpha, Cp), wk(T + W, t.psi, onep), wk(T, x.beta, Tp),
                        wk(one, s.psi, W + Tp), wk(C, s.ring->eta, W + Tp)})
                     .mat,
                 rhs);
  r.expect_equal("mixed_counit",
                 chain({wk(T, s.coring->eps, W + Cp), wk(one, s.psi, W + Cp), wk(C, x.alpha, Cp),
                        wk(C + W, t.psi, onep), wk(C, x.beta, Tp), wk(one, s.coring->delta, W + Tp)})
                     .mat,
                 rhs);
  return r;
}

Report check_entw_2cell(const EntwOneCell& a, const EntwOneCell& b, const Matrix& omega) {
  Report r;
  r.title = "entwining 2-cell " + a.w->name + " => " + b.w->name;
  if (a.source.get() != b.source.get() || a.target.get() != b.target.get())
    throw BaseMismatch("2-cell between 1-cells with different endpoints");
  const WeakEntwining &s = *a.source, &t = *a.target;
  Cell om = make_cell(word_of({a.w}), word_of({b.w}), omega);
  r.expect("omega_bimodule_map", is_bimodule_cell(om));
  const Word one = s.one(), onep = t.one();
  r.expect_equal("alpha_naturality", chain({b.alpha, wk(one, om, t.T())}).mat,
                 chain({wk(s.T(), om, onep), a.alpha}).mat);
  r.expect_equal("beta_naturality", chain({b.beta, wk(s.C(), om, onep)}).mat,
                 chain({wk(one, om, t.C()), a.beta}).mat);
  return r;
}

WeakEntwiningPtr trivial_entwining(const AlgebraPtr& r) {
  auto ring = trivial_rring(r);
  auto coring = trivial_rcoring(r);
  auto rr = tensor_over_R(ring->carrier, ring->carrier);
  return make_weak_entwining("trivial(" + r->name + ")", ring, coring, Matrix::identity(r->field, rr->dim()));
}

WeakEntwiningPtr linear_dual(const WeakEntwining& we) {
  if (!is_ground(*we.base)) throw UnsupportedBase("linear_dual requires the ground field as base, got '" + we.base->name + "'");
  const Field f = we.base->field;
  auto tdual = vector_space(we.coring->carrier->name + "*", f, we.coring->carrier->dim);
  auto cdual = vector_space(we.ring->carrier->name + "*", f, we.ring->carrier->dim);
  auto ring = make_rring(we.coring->name + "*", tdual, we.coring->delta.mat.transpose(), we.coring->eps.mat.transpose());
  auto coring = make_rcoring(we.ring->name + "*", cdual, we.ring->mu.mat.transpose(), we.ring->eta.mat.transpose());
  return make_weak_entwining(we.name + "*", ring, coring, we.psi.mat.transpose());
}

}  // namespace wentw
