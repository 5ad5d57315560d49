#include "wentw/lifting.hpp"

namespace wentw {

namespace {

Cell wk(const Word& l, const Cell& f, const Word& r) { return whisker(l, f, r); }

std::size_t reduced_ambient(const Word& w) { return w.empty() ? 1 : w.ambient_dim(); }

Matrix action_image(const SplitIdempotent& s, const Matrix& action, const std::string& what) {
  Matrix restricted = s.proj * action * s.incl;
  if (action * s.incl != s.incl * restricted) throw NotWellDefined(what + " does not preserve the image");
  return restricted;
}

}  // namespace

QImage q_on_1cell(const MndCell& cell, PivotPreference pref) {
  Report cond = check_mnd_iota_1cell(cell);
  if (!cond.passed()) throw OneCellConditionFailed("(" + cell.v.to_string() + ", psi) is not a monad 1-cell");
  QImage q;
  q.cell = cell;
  q.preference = pref;
  q.idempotent = mnd_idempotent(cell);
  if (q.idempotent.mat * q.idempotent.mat != q.idempotent.mat)
    throw NotIdempotent("canonical idempotent of " + cell.v.to_string() + " is not idempotent");
  q.split = solve_right_inverse_on_image(q.idempotent.mat, pref);
  const AlgebraPtr &ta = cell.ring->algebra, &tpa = cell.ring_prime->algebra;
  if (cell.v.empty() && cell.ring.get() == cell.ring_prime.get() && q.split.proj.is_identity()) {
    q.carrier = unit_bimodule(ta);
    return q;
  }
  const Field f = ta->field;
  const Word T = cell.ring->word(), Tp = cell.ring_prime->word();
  const Word one = identity_word(cell.ring->base), onep = identity_word(cell.ring_prime->base);
  const Word A = q.ambient();
  auto pA = present(A);
  auto pL = present(T + A);
  auto pR = present(A + Tp);
  Cell left = wk(one, cell.ring->mu, cell.v);
  Cell right = compose({wk(one, cell.ring->mu, cell.v), wk(T, cell.psi, onep)});
  Matrix sect = pA->to_ambient(Matrix::identity(f, pA->dim()));
  std::vector<Matrix> lefts, rights;
  for (std::size_t j = 0; j < ta->dim; ++j) {
    Matrix act = left.mat * pL->to_quotient(kron(Matrix::unit_column(f, ta->dim, j), sect));
    lefts.push_back(action_image(q.split, act, "left action"));
  }
  for (std::size_t j = 0; j < tpa->dim; ++j) {
    Matrix act = right.mat * pR->to_quotient(kron(sect, Matrix::unit_column(f, tpa->dim, j)));
    rights.push_back(action_image(q.split, act, "right action"));
  }
  q.carrier = make_bimodule("Q(" + cell.v.to_string() + ")", ta, tpa, q.split.rank, std::move(lefts), std::move(rights));
  return q;
}

Matrix q_on_2cell(const QImage& s, const QImage& t, const Cell& omega) {
  Report r = check_mnd_iota_2cell(s.cell, t.cell, omega);
  if (!r.passed())
    throw TwoCellConditionFailed(omega.source.to_string() + " => " + omega.target.to_string() + " is not a monad 2-cell");
  const Word T = s.cell.ring->word(), onep = identity_word(s.cell.ring_prime->base);
  Matrix m = t.proj() * whisker(T, omega, onep).mat * s.incl();
  if (!is_intertwiner(*s.carrier, *t.carrier, m)) throw NotWellDefined("Q(omega) is not a bimodule map");
  return m;
}

MndCell compose_mnd(const MndCell& inner, const MndCell& outer) {
  if (inner.ring_prime.get() != outer.ring.get()) throw BaseMismatch("monad 1-cells are not composable");
  const Word one = identity_word(inner.ring->base), onepp = identity_word(outer.ring_prime->base);
  Cell psi = compose({wk(one, inner.psi, outer.v), wk(inner.v, outer.psi, onepp)});
  return MndCell{inner.ring, outer.ring_prime, inner.v + outer.v, std::move(psi)};
}

CoherenceIso coherence_iso(const QImage& q1, const QImage& q2, const QImage& qc) {
  const Field f = q1.carrier->field();
  const Word A1 = q1.ambient(), A2 = q2.ambient(), Ac = qc.ambient();
  if (!(Ac == q1.cell.ring->word() + q1.cell.v + q2.cell.v)) throw BaseMismatch("coherence_iso: composite does not match");
  auto p1 = present(A1), p2 = present(A2), pc = present(Ac);
  const std::size_t amb_v2 = reduced_ambient(q2.cell.v);
  const AlgebraPtr& tp = q2.cell.ring->algebra;
  Word Q12 = word_of({q1.carrier, q2.carrier});
  auto p12 = present(Q12);
  CoherenceIso g;
  g.source = qc.carrier;
  g.target = p12->quotient;

  Matrix a1 = q1.proj() * p1->to_quotient(Matrix::identity(f, p1->ambient_dim));
  Matrix a2 = q2.proj() * p2->to_quotient(kron(tp->unit, Matrix::identity(f, amb_v2)));
  Matrix full = descend_source(Ac, p12->to_quotient(kron(a1, a2)));
  g.gamma = full * qc.incl();

  Matrix x1 = kron(Matrix::identity(f, q1.carrier->dim), p2->to_ambient(q2.incl()));
  Matrix x2 = kron(q1.carrier->right_action_ambient(), Matrix::identity(f, amb_v2));
  Matrix x3 = kron(p1->to_ambient(q1.incl()), Matrix::identity(f, amb_v2));
  g.gamma_inv = descend_source(Q12, qc.proj() * pc->to_quotient(x3 * x2 * x1));

  if (!(g.gamma * g.gamma_inv).is_identity() || !(g.gamma_inv * g.gamma).is_identity())
    throw CoherenceNotInvertible("coherence map for " + Ac.to_string() + " is not invertible");
  return g;
}

LiftedCoring lift_comonad(const WeakEntwiningPtr& we, PivotPreference pref) {
  if (classify(*we) == Classification::NotEntwining)
    throw AxiomFailure("cannot lift the comonad of '" + we->name + "': not a weak entwining");
  LiftedCoring lc;
  lc.we = we;
  MndCell cc = comonad_cell(*we);
  lc.image = q_on_1cell(cc, pref);
  lc.identity = q_on_1cell(identity_mnd_cell(we->ring), pref);
  lc.composite = q_on_1cell(compose_mnd(cc, cc), pref);
  lc.gamma = coherence_iso(lc.image, lc.image, lc.composite);
  Matrix qdelta = q_on_2cell(lc.image, lc.composite, we->coring->delta);
  Matrix qeps = q_on_2cell(lc.image, lc.identity, we->coring->eps);
  lc.coring = make_rcoring(we->coring->name + "^", lc.image.carrier, lc.gamma.gamma * qdelta, qeps);
  if (!check_lifted_coring(lc).passed())
    throw AxiomFailure("lifted coring of '" + we->name + "' violates the coring axioms");
  return lc;
}

Report check_lifted_coring(const LiftedCoring& lc) {
  Report r = check_rcoring(*lc.coring);
  r.title = "lifted coring of " + lc.we->name;
  r.add_constant("carrier_dim", static_cast<long long>(lc.image.carrier->dim));
  return r;
}

Report check_coherence_triple(const WeakEntwiningPtr& we) {
  Report r;
  r.title = "coherence of " + we->name;
  MndCell cc = comonad_cell(*we);
  MndCell idc = identity_mnd_cell(we->ring);
  QImage q1 = q_on_1cell(cc), qid = q_on_1cell(idc);
  r.expect("identity_strict", qid.split.proj.is_identity() && qid.carrier.get() == unit_bimodule(we->ring->algebra).get());
  MndCell c12 = compose_mnd(cc, cc);
  MndCell c123 = compose_mnd(c12, cc), c123b = compose_mnd(cc, c12);
  r.expect_equal("composite_associative", c123.psi.mat, c123b.psi.mat);
  QImage q12 = q_on_1cell(c12), q123 = q_on_1cell(c123);
  CoherenceIso g12 = coherence_iso(q1, q1, q12);
  CoherenceIso g12_3 = coherence_iso(q12, q1, q123);
  CoherenceIso g1_23 = coherence_iso(q1, q12, q123);
  r.expect("gamma_invertible", true);
  const BimodulePtr& c = q1.carrier;
  BimoduleMap gm{q12.carrier, g12.target, g12.gamma};
  Iso a = associator(c, c, c);
  Matrix left_path = a.forward * tensor_maps(gm, identity_map(c)).mat * g12_3.gamma;
  Matrix right_path = tensor_maps(identity_map(c), gm).mat * g1_23.gamma;
  r.expect_equal("triple_consistency", left_path, right_path);
  // Identity factors: gamma followed by the unitor is the identity.
  QImage ql = q_on_1cell(compose_mnd(idc, cc)), qr = q_on_1cell(compose_mnd(cc, idc));
  CoherenceIso gl = coherence_iso(qid, q1, ql), gr = coherence_iso(q1, qid, qr);
  Matrix id = Matrix::identity(c->field(), c->dim);
  r.expect_equal("left_identity", left_unitor(c) * gl.gamma * splitting_iso(q1, ql).forward, id);
  r.expect_equal("right_identity", right_unitor(c) * gr.gamma * splitting_iso(q1, qr).forward, id);
  r.add_constant("composite_dim", static_cast<long long>(q12.carrier->dim));
  r.add_constant("triple_dim", static_cast<long long>(q123.carrier->dim));
  return r;
}

LiftedMonadObject lift_monad_on(const WeakEntwiningPtr& we, const RightComodule& m, PivotPreference pref) {
  if (m.coring.get() != we->coring.get()) throw BaseMismatch("lift_monad_on: comodule over a different coring");
  LiftedMonadObject o;
  o.we = we;
  o.comodule = m;
  const Field f = we->base->field;
  const Word T = we->T(), C = we->C(), one = we->one();
  const Word M = word_of({m.carrier}), k = identity_word(m.carrier->left);
  Cell eps_psi = compose({whisker(T, we->coring->eps, one), we->psi});
  o.idempotent = compose({whisker(M, eps_psi, one), whisker(k, m.coaction, T)});
  if (o.idempotent.mat * o.idempotent.mat != o.idempotent.mat)
    throw NotIdempotent("lifted monad idempotent on " + m.carrier->name + " is not idempotent");
  o.split = solve_right_inverse_on_image(o.idempotent.mat, pref);
  auto pmt = present(M + T);
  std::vector<Matrix> lefts, rights;
  for (auto& a : pmt->quotient->left_action) lefts.push_back(action_image(o.split, a, "left action"));
  for (auto& a : pmt->quotient->right_action) rights.push_back(action_image(o.split, a, "right action"));
  auto img = make_bimodule("t^(" + m.carrier->name + ")", m.carrier->left, m.carrier->right, o.split.rank,
                           std::move(lefts), std::move(rights));
  Cell spread = compose({whisker(M, we->psi, one), whisker(k, m.coaction, T)});
  Word I = word_of({img});
  auto pmtc = present(M + T + C);
  Matrix pi_c = descend(M + T + C, I + C, kron(o.split.proj * pmt->to_quotient(Matrix::identity(f, pmt->ambient_dim)),
                                               Matrix::identity(f, we->coring->carrier->dim)))
                    .mat;
  o.image = make_comodule(we->coring, img, pi_c * spread.mat * o.split.incl);
  o.unit = o.split.proj * whisker(M, we->ring->eta, one).mat;
  return o;
}

Matrix lifted_monad_mult(const LiftedMonadObject& outer, const LiftedMonadObject& inner) {
  if (outer.comodule.carrier.get() != inner.image.carrier.get())
    throw BaseMismatch("lifted_monad_mult: outer object is not built on the inner image");
  const Field f = inner.we->base->field;
  const Word T = inner.we->T(), one = inner.we->one();
  const Word M = word_of({inner.comodule.carrier}), I = word_of({inner.image.carrier});
  auto pmt = present(M + T);
  Matrix incl_t = descend(I + T, M + T + T,
                          kron(pmt->to_ambient(inner.split.incl), Matrix::identity(f, inner.we->ring->carrier->dim)))
                      .mat;
  return inner.split.proj * whisker(M, inner.we->ring->mu, one).mat * incl_t * outer.split.incl;
}

Matrix lifted_monad_map(const LiftedMonadObject& m, const LiftedMonadObject& n, const Matrix& f) {
  Cell c = make_cell(word_of({m.comodule.carrier}), word_of({n.comodule.carrier}), f);
  return n.split.proj * whisker(identity_word(m.comodule.carrier->left), c, m.we->T()).mat * m.split.incl;
}

Report check_lifted_monad_at(const LiftedMonadObject& m) {
  Report r;
  r.title = "lifted monad at " + m.comodule.carrier->name;
  r.absorb(check_comodule(m.image), "image.");
  LiftedMonadObject m2 = lift_monad_on(m.we, m.image);
  LiftedMonadObject m3 = lift_monad_on(m.we, m2.image);
  Matrix mult = lifted_monad_mult(m2, m);
  Matrix id = Matrix::identity(m.we->base->field, m.split.rank);
  r.expect_equal("left_unit", mult * m2.unit, id);
  r.expect_equal("right_unit", mult * lifted_monad_map(m, m2, m.unit), id);
  r.expect_equal("associativity", mult * lifted_monad_map(m3, m2, mult), mult * lifted_monad_mult(m3, m2));
  const Word C = m.we->C();
  const Word k = identity_word(m.comodule.carrier->left);
  Cell unit{word_of({m.comodule.carrier}), word_of({m.image.carrier}), m.unit};
  r.expect_equal("unit_colinear", m.image.coaction.mat * m.unit, whisker(k, unit, C).mat * m.comodule.coaction.mat);
  Cell mc{word_of({m2.image.carrier}), word_of({m.image.carrier}), mult};
  r.expect_equal("mult_colinear", m.image.coaction.mat * mult, whisker(k, mc, C).mat * m2.image.coaction.mat);
  r.add_constant("image_dim", static_cast<long long>(m.split.rank));
  return r;
}

SplittingIso splitting_iso(const QImage& a, const QImage& b) {
  if (a.idempotent.mat != b.idempotent.mat) throw BaseMismatch("splitting_iso: different idempotents");
  SplittingIso s{b.proj() * a.incl(), a.proj() * b.incl()};
  if (!(s.forward * s.backward).is_identity() || !(s.backward * s.forward).is_identity())
    throw NotWellDefined("splittings are not isomorphic");
  if (!is_intertwiner(*a.carrier, *b.carrier, s.forward)) throw NotWellDefined("splitting iso is not a bimodule map");
  return s;
}

}  // namespace wentw
