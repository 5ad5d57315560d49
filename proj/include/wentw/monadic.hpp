#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wentw/tensor.hpp"

namespace wentw {

/// A monoid T in R-bimodules: mu : T (x)_R T -> T, eta : R -> T.
struct RRing {
  std::string name;
  AlgebraPtr base;
  BimodulePtr carrier;
  Cell mu;   ///< [T, T] -> [T]
  Cell eta;  ///< 1[R] -> [T]
  /// T as a k-algebra; meaningful only when check_rring passes.
  AlgebraPtr algebra;

  Word word() const { return word_of({carrier}); }
};
using RRingPtr = std::shared_ptr<const RRing>;

/// A comonoid C in R-bimodules: delta : C -> C (x)_R C, eps : C -> R.
struct RCoring {
  std::string name;
  AlgebraPtr base;
  BimodulePtr carrier;
  Cell delta;  ///< [C] -> [C, C]
  Cell eps;    ///< [C] -> 1[R]

  Word word() const { return word_of({carrier}); }
};
using RCoringPtr = std::shared_ptr<const RCoring>;

/// `mu` in quotient coordinates of T (x)_R T; `eta` is dim T x dim R.
/// Shapes and bases are validated, axioms are not.
RRingPtr make_rring(std::string name, BimodulePtr carrier, Matrix mu, Matrix eta);
RCoringPtr make_rcoring(std::string name, BimodulePtr carrier, Matrix delta, Matrix eps);
/// R with its multiplication.
RRingPtr trivial_rring(const AlgebraPtr& r);
/// R with delta = inverse unitor and eps = id.
RCoringPtr trivial_rcoring(const AlgebraPtr& r);

/// Bimodule-map property of mu and eta, associativity, both unit laws.
Report check_rring(const RRing& t);
/// Bimodule-map property of delta and eps, coassociativity, both counit laws.
Report check_rcoring(const RCoring& c);

/// A right T-module: carrier M (an S-R bimodule, usually S = k) with
/// action M (x)_R T -> M.
struct RightModule {
  RRingPtr ring;
  BimodulePtr carrier;
  Cell action;  ///< [M, T] -> [M]
};

/// A right C-comodule with coaction M -> M (x)_R C.
struct RightComodule {
  RCoringPtr coring;
  BimodulePtr carrier;
  Cell coaction;  ///< [M] -> [M, C]
};

RightModule make_module(RRingPtr ring, BimodulePtr carrier, Matrix action);
RightComodule make_comodule(RCoringPtr coring, BimodulePtr carrier, Matrix coaction);

Report check_module(const RightModule& m);
Report check_comodule(const RightComodule& m);

/// M (x)_R T with the action induced by mu.
RightModule free_module(const RRingPtr& t, const BimodulePtr& m);
/// T as a right module over itself (carrier restricted to left base k).
RightModule regular_module(const RRingPtr& t);
/// C as a right comodule over itself (carrier restricted to left base k).
RightComodule regular_comodule(const RCoringPtr& c);

/// Matrix of f (x) X for a linear map f : M -> N between the first factors
/// and a fixed word X, without asserting that f is balanced.
Matrix whisker_right_unchecked(const BimodulePtr& m, const BimodulePtr& n, const Matrix& f, const Word& x);

/// Canonical basis of T-linear maps m -> n (also linear for the carriers'
/// bimodule actions).
std::vector<Matrix> module_hom_space(const RightModule& m, const RightModule& n);
/// Canonical basis of C-colinear maps.
std::vector<Matrix> comodule_hom_space(const RightComodule& m, const RightComodule& n);

/// Residual blocks shared by the hom solvers: bimodule linearity of x.
Matrix bimodule_residual(const Bimodule& v, const Bimodule& w, const Matrix& x);

}  // namespace wentw
