#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wentw/monadic.hpp"

namespace wentw {

// Whiskering convention: in a composite functor word the leftmost symbol is
// outermost and contributes the rightmost tensor factor, so psi : tc => ct is
// a bimodule map C (x)_R T -> T (x)_R C. Equations below are written in
// tensor order.

/// (T, C, Psi) over a common base R. Construction does not enforce axioms.
struct WeakEntwining {
  std::string name;
  AlgebraPtr base;
  RRingPtr ring;
  RCoringPtr coring;
  Cell psi;  ///< [C, T] -> [T, C]

  Word T() const { return ring->word(); }
  Word C() const { return coring->word(); }
  Word one() const { return identity_word(base); }
};
using WeakEntwiningPtr = std::shared_ptr<const WeakEntwining>;

WeakEntwiningPtr make_weak_entwining(std::string name, RRingPtr ring, RCoringPtr coring, Matrix psi);

enum class Classification { Strong, WeakOnly, NotEntwining };
std::string to_string(Classification c);
std::optional<Classification> parse_classification(const std::string& s);

/// Checks, in tensor order:
///   axiom1  Psi (C x mu) = (mu x C)(T x Psi)(Psi x T)
///   axiom2  (T x delta) Psi = (Psi x C)(C x Psi)(delta x T)
///   axiom3  Psi (C x eta) = (T x eps x C)(Psi x C)(C x eta x C) delta
///   axiom4  (T x eps) Psi = mu (T x eps x T)(Psi x T)(C x eta x T)
///   strong_unit    Psi (C x eta) = eta x C
///   strong_counit  (T x eps) Psi = eps x T
/// plus the ring and coring axioms, bimodule linearity of Psi and, when
/// axioms 1-4 hold, two identities that follow from them. The label
/// "classification" holds Strong, WeakOnly or NotEntwining.
Report check_weak_entwining(const WeakEntwining& we);
Classification classification_of(const Report& r);
Classification classify(const WeakEntwining& we);

/// The axioms read under the mirrored whiskering convention (every tensor word
/// reversed). Only available over the ground field; returns nullopt otherwise.
std::optional<Classification> mirror_classification(const WeakEntwining& we);

enum class Side { ComonadSide, MonadSide };
std::string to_string(Side s);

struct CanonicalIdempotent {
  Side side;
  Cell e;  ///< endomorphism of [T, C] (ComonadSide) or [C, T] (MonadSide)
};

/// ComonadSide: (mu x C)(T x Psi)(T x C x eta), i.e. t (x) c -> t Psi(c (x) 1).
/// MonadSide: (C x T x eps)(C x Psi)(delta x T).
/// Throws NotIdempotent if e e != e.
CanonicalIdempotent canonical_idempotent(const WeakEntwining& we, Side side);
/// The same composite without the idempotency assertion.
Cell canonical_endomorphism(const WeakEntwining& we, Side side);

/// A 1-cell of the extended monad 2-category: a word V from R to R' with
/// psi : V T' -> T V, where T is over R and T' over R'.
struct MndCell {
  RRingPtr ring;        ///< T
  RRingPtr ring_prime;  ///< T'
  Word v;
  Cell psi;  ///< v + [T'] -> [T] + v
};

/// psi (V x mu') = (mu x V)(T x psi)(psi x T').
Report check_mnd_iota_1cell(const MndCell& c);
/// For omega : V -> W: (T x omega) psi = (mu x W)(T x phi)(T x omega x T')(psi x T')(V x eta' x T').
Report check_mnd_iota_2cell(const MndCell& source, const MndCell& target, const Cell& omega);
/// Endomorphism (mu x V)(T x psi)(T x V x eta') of [T] + v.
Cell mnd_idempotent(const MndCell& c);
/// (C, Psi) as a 1-cell of the monad 2-category.
MndCell comonad_cell(const WeakEntwining& we);
/// (1, identity) on T.
MndCell identity_mnd_cell(const RRingPtr& t);

/// A 1-cell of weak entwinings: W an R-R' bimodule with
/// alpha : W T' -> T W and beta : C W -> W C'.
struct EntwOneCell {
  WeakEntwiningPtr source;  ///< over R
  WeakEntwiningPtr target;  ///< over R'
  BimodulePtr w;
  Cell alpha;  ///< [W, T'] -> [T, W]
  Cell beta;   ///< [C, W] -> [W, C']
};

EntwOneCell make_entw_1cell(WeakEntwiningPtr source, WeakEntwiningPtr target, BimodulePtr w, Matrix alpha,
                            Matrix beta);
/// W = R with alpha, beta the unit isomorphisms.
EntwOneCell identity_entw_1cell(const WeakEntwiningPtr& we);

/// In tensor order:
///   alpha_mult      alpha (W x mu') = (mu x W)(T x alpha)(alpha x T')
///   alpha_unit      alpha (W x eta') = eta x W
///   beta_comult     (W x delta') beta = (beta x C')(C x beta)(delta x W)
///   beta_counit     (W x eps') beta = eps x W
///   mixed_unit      (mu x W x C')(T x alpha x C')(T x W x Psi')(T x beta x T')(Psi x W x T')(C x eta x W x T')
///                   = (T x beta)(Psi x W)(C x alpha)
///   mixed_counit    (T x eps x W x C')(Psi x W x C')(C x alpha x C')(C x W x Psi')(C x beta x T')(delta x W x T')
///                   = (T x beta)(Psi x W)(C x alpha)
Report check_entw_1cell(const EntwOneCell& cell);
/// alpha' (omega x T') = (T x omega) alpha and beta' (C x omega) = (omega x C') beta.
Report check_entw_2cell(const EntwOneCell& source, const EntwOneCell& target, const Matrix& omega);

/// R with its trivial ring and coring and Psi the identity of R (x)_R R.
WeakEntwiningPtr trivial_entwining(const AlgebraPtr& r);

/// Over the ground field only: ring C*, coring T*, Psi transposed. Duals of
/// tensor products are identified factorwise in the same order, so all
/// structure matrices are plain transposes. Throws UnsupportedBase otherwise.
WeakEntwiningPtr linear_dual(const WeakEntwining& we);

}  // namespace wentw
