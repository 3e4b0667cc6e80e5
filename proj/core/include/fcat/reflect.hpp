#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fcat/kan.hpp"
#include "fcat/limits.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

/// C, its unit θ_C and the (surjection, injection) factorization
/// θ_C = μ_C · η_C with I(C) in the middle.
struct ReflectedObject {
  SetFunctor object;  // I(C)
  NatTrans eta;       // C -> I(C)
  NatTrans mu;        // I(C) -> GF(C)
  NatTrans theta;     // C -> GF(C)
};

/// The reflection onto Mono(F) induced by an adjunction F ⊣ G between
/// presheaf categories, obtained by factoring the unit componentwise.
class InducedReflection {
 public:
  explicit InducedReflection(AdjunctionPtr adjunction);

  const Adjunction& adjunction() const { return *adjunction_; }
  const AdjunctionPtr& adjunction_ptr() const { return adjunction_; }
  CategoryPtr shape() const { return adjunction_->domain_shape(); }

 private:
  AdjunctionPtr adjunction_;
};

ReflectedObject reflect_object(const InducedReflection& r, const SetFunctor& c);

/// The unique I(f) with I(f)·η_C = η_C'·f and μ_C'·I(f) = GF(f)·μ_C.
NatTrans reflect_morphism(const InducedReflection& r, const NatTrans& f);

/// θ_C is a monomorphism.
bool in_subcategory(const InducedReflection& r, const SetFunctor& c);

/// I(f) is an isomorphism.
bool is_in_E_I(const InducedReflection& r, const NatTrans& f);

/// The square η_C' · f = I(f) · η_C is a pullback.
bool is_in_M_I(const InducedReflection& r, const NatTrans& f);

/// f = m · e through P = C' ×_{I(C')} I(C). Throws VerificationFailed when
/// e is not in E_I or m is not in M_I.
struct ReflectiveFactorization {
  SetFunctor mid;
  NatTrans e;
  NatTrans m;
};

ReflectiveFactorization reflective_factorization(const InducedReflection& r, const NatTrans& f);

/// The pullback of η_C along g: A -> I(C) and what the stable-units
/// theorem says about it.
struct StableUnitsReport {
  FunctorPullback square;   // apex P, to_left = g*(η_C): P -> A, to_right: P -> C
  bool stable = false;      // I(g*(η_C)) is an isomorphism
  bool gf_preserves = false;  // GF sends the square to a pullback
  bool unit_epi = false;      // η_C is epi
  bool pulled_back_epi = false;  // g*(η_C) is epi
};

StableUnitsReport check_stable_units_instance(const InducedReflection& r, const SetFunctor& c,
                                              const NatTrans& g);

/// Pulls f back along each probe (probes share f's codomain) and stops at
/// the first pullback outside E_I. Passing does not prove membership in
/// E'_I. Throws FNotInEI when f itself is not in E_I.
struct EPrimeResult {
  bool passed = true;
  std::size_t probes_checked = 0;
  std::optional<std::size_t> probe;  // index of the failing probe
  std::optional<NatTrans> pulled_back;  // g*(f) for the failing probe g
};

EPrimeResult is_in_E_prime_falsify(const InducedReflection& r, const NatTrans& f,
                                   const std::vector<NatTrans>& probes);

/// Subfunctor inclusions into `target` followed by its canonical
/// presentation, at most `cap` probes in total.
std::vector<NatTrans> default_probes(const SetFunctor& target, std::size_t cap);

/// p*(f) is in M_I, for a cover p: E -> cod(f). Throws CoverNotEpi or
/// CoverDomainNotInSubcategory.
bool is_in_M_star(const InducedReflection& r, const NatTrans& f, const NatTrans& p);

/// The coproduct E of representables J(j, -), one per element x of M(j),
/// and the epimorphism p: E -> M sending h in the summand of x to M(h)(x).
struct Presentation {
  Coproduct cover;
  std::vector<std::pair<Obj, Elem>> summands;  // (j, x) per summand
  NatTrans p;
};

Presentation canonical_presentation(const SetFunctor& m);

/// The map J(j, -) -> M picked out by x in M(j).
NatTrans yoneda_map(const SetFunctor& m, Obj j, Elem x);

}  // namespace fcat
