#pragma once

#include "wentw/entwine.hpp"

namespace wentw {

/// Image of the canonical idempotent of a monad 1-cell (V, psi): a
/// T-T' bimodule (T, T' as k-algebras) split off [T] + V.
struct QImage {
  MndCell cell;
  Cell idempotent;       ///< endomorphism of [T] + V
  SplitIdempotent split;  ///< of idempotent.mat
  BimodulePtr carrier;   ///< left T action by multiplication, right T' action through psi
  PivotPreference preference = PivotPreference::Leftmost;

  Word ambient() const { return cell.ring->word() + cell.v; }
  const Matrix& proj() const { return split.proj; }
  const Matrix& incl() const { return split.incl; }
};

/// Throws OneCellConditionFailed if (V, psi) is not a 1-cell, NotIdempotent
/// if the idempotent fails. The identity 1-cell gets the trivial split and
/// the regular bimodule of T as carrier.
QImage q_on_1cell(const MndCell& cell, PivotPreference pref = PivotPreference::Leftmost);
/// proj_tgt (T x omega) incl_src. Throws TwoCellConditionFailed.
Matrix q_on_2cell(const QImage& source, const QImage& target, const Cell& omega);

/// Horizontal composite: inner (V, psi) : T <- T', outer (V', psi') : T' <- T''
/// gives (V V', (psi x V')(V x psi')).
MndCell compose_mnd(const MndCell& inner, const MndCell& outer);

struct CoherenceIso {
  BimodulePtr source;  ///< Q of the composite
  BimodulePtr target;  ///< Q(inner) (x)_T' Q(outer)
  Matrix gamma;
  Matrix gamma_inv;
};

/// gamma : Q(V V') -> Q(V) (x) Q(V'), x -> sum pi(t (x) v) (x) pi'(1 (x) v')
/// on incl(x) = sum t (x) v (x) v'. Throws CoherenceNotInvertible.
CoherenceIso coherence_iso(const QImage& inner, const QImage& outer, const QImage& composite);

/// The T-coring C^ = Q(C, Psi) with delta^ = gamma Q(delta) and eps^ = Q(eps).
struct LiftedCoring {
  WeakEntwiningPtr we;
  QImage image;
  QImage identity;   ///< Q of the identity 1-cell on T
  QImage composite;  ///< Q((C, Psi)(C, Psi))
  CoherenceIso gamma;
  RCoringPtr coring;  ///< over the k-algebra T
};

/// Requires classification Strong or WeakOnly (throws AxiomFailure otherwise
/// or if the lifted coring axioms fail).
LiftedCoring lift_comonad(const WeakEntwiningPtr& we, PivotPreference pref = PivotPreference::Leftmost);
/// Coassociativity and counit laws of the lifted coring.
Report check_lifted_coring(const LiftedCoring& lc);

/// Pentagon-style consistency of gamma on (C, Psi) composed three times:
/// the two ways of splitting Q(CCC) into Q(C) (x) Q(C) (x) Q(C) agree
/// through the associator.
Report check_coherence_triple(const WeakEntwiningPtr& we);

/// The lifted monad applied to a C-comodule M: image of the idempotent
/// (M x ((T x eps) Psi))(kappa x T) on [M, T], with its induced coaction,
/// unit M -> image and multiplication image(image) -> image.
struct LiftedMonadObject {
  WeakEntwiningPtr we;
  RightComodule comodule;
  Cell idempotent;  ///< endomorphism of [M, T]
  SplitIdempotent split;
  RightComodule image;  ///< carrier is a k-R bimodule; coaction (pi x C)(M x Psi)(kappa x T) incl
  Matrix unit;           ///< M -> image: pi (M x eta)
};

LiftedMonadObject lift_monad_on(const WeakEntwiningPtr& we, const RightComodule& m,
                                PivotPreference pref = PivotPreference::Leftmost);
/// Multiplication image(image(M)) -> image(M): pi (M x mu)(incl x T) incl'.
Matrix lifted_monad_mult(const LiftedMonadObject& outer, const LiftedMonadObject& inner);
/// The lifted monad on a comodule map f : M -> N: pi_N (f x T) incl_M.
Matrix lifted_monad_map(const LiftedMonadObject& m, const LiftedMonadObject& n, const Matrix& f);
/// Unit and associativity laws of the lifted monad at M, plus colinearity of
/// its unit and multiplication.
Report check_lifted_monad_at(const LiftedMonadObject& m);

/// Invertible intertwiner between the carriers of two splittings of the same
/// idempotent: proj_b incl_a, with inverse proj_a incl_b.
struct SplittingIso {
  Matrix forward;
  Matrix backward;
};
SplittingIso splitting_iso(const QImage& a, const QImage& b);

}  // namespace wentw
