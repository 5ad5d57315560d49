#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wentw/lifting.hpp"

namespace wentw {

/// (M, rho, kappa): a right T-module and right C-comodule with
/// kappa rho = (rho x C)(M x Psi)(kappa x T). The carrier is a k-R bimodule.
struct WeakEntwinedModule {
  WeakEntwiningPtr we;
  std::string name;
  BimodulePtr carrier;
  Cell action;    ///< [M, T] -> [M]
  Cell coaction;  ///< [M] -> [M, C]

  RightModule as_module() const { return {we->ring, carrier, action}; }
  RightComodule as_comodule() const { return {we->coring, carrier, coaction}; }
};

WeakEntwinedModule make_entwined_module(WeakEntwiningPtr we, std::string name, BimodulePtr carrier, Matrix action,
                                        Matrix coaction);
/// Module axioms ("module."), comodule axioms ("comodule.") and "compatibility".
Report check_weak_entwined_module(const WeakEntwinedModule& x);

using LiftedCoringPtr = std::shared_ptr<const LiftedCoring>;

/// A right T-module M (as a k-T bimodule) with a C^-coaction xi : M -> M (x)_T C^.
struct LiftedComoduleStructure {
  LiftedCoringPtr lifted;
  std::string name;
  RightModule module;       ///< over the R-ring T
  RightComodule comodule;   ///< over the lifted coring; carrier is M as a k-T bimodule
};

/// M as a k-T bimodule, T acting through the module action.
BimodulePtr as_t_bimodule(const RightModule& m);
/// The injection M (x)_T C^ -> M (x)_R C, m (x) q -> sum rho(m (x) t_k) (x) c_k
/// where incl(q) = sum t_k (x) c_k.
Matrix comparison_map(const LiftedCoring& lc, const RightModule& m, const BimodulePtr& m_over_t);

/// xi = J^-1 kappa, defined because kappa lands in the image of J.
LiftedComoduleStructure kappa_to_xi(const LiftedCoringPtr& lc, const WeakEntwinedModule& x);
/// kappa = J xi.
WeakEntwinedModule xi_to_kappa(const LiftedComoduleStructure& y);
/// Module axioms, C^-comodule axioms, T-linearity of xi.
Report check_lifted_comodule(const LiftedComoduleStructure& y);

/// A C-comodule with an algebra structure a : t^(M) -> M for the lifted monad.
struct LiftedMonadAlgebra {
  std::string name;
  LiftedMonadObject object;
  Matrix action;  ///< image -> M
};

/// a = rho incl.
LiftedMonadAlgebra to_lifted_monad_algebra(const WeakEntwinedModule& x);
/// rho = a proj.
WeakEntwinedModule from_lifted_monad_algebra(const LiftedMonadAlgebra& a);
/// Unit, associativity and colinearity of the algebra map.
Report check_lifted_monad_algebra(const LiftedMonadAlgebra& a);

/// Maps that are simultaneously T-linear and C-colinear.
std::vector<Matrix> entwined_hom_space(const WeakEntwinedModule& x, const WeakEntwinedModule& y);
/// T-linear C^-colinear maps.
std::vector<Matrix> lifted_comodule_hom_space(const LiftedComoduleStructure& x, const LiftedComoduleStructure& y);
/// C-colinear maps commuting with the lifted monad actions.
std::vector<Matrix> lifted_monad_hom_space(const LiftedMonadAlgebra& x, const LiftedMonadAlgebra& y);

/// Round trips for every object, equal hom dimensions for every pair and
/// transfer of entwined morphisms to both other categories. Constants
/// "hom.<x>.<y>.{entwined,comodule,monad}" record the dimensions.
Report verify_em_equivalence(const WeakEntwiningPtr& we, const std::vector<WeakEntwinedModule>& objects,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             PivotPreference pref = PivotPreference::Leftmost);

}  // namespace wentw
