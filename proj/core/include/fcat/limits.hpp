#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fcat/setfunctor.hpp"

namespace fcat {

/// A cone over a diagram D: apex plus one leg apex -> D(i) per object.
struct Cone {
  FinSet apex;
  std::vector<FinFunction> legs;
};

/// A cocone under D: nadir plus one leg D(i) -> nadir per object.
struct Cocone {
  FinSet nadir;
  std::vector<FinFunction> legs;
};

/// The limit of a finite diagram of finite sets, realized as the set of
/// compatible tuples (one coordinate per object of the shape) in
/// lexicographic order.
struct Limit {
  Cone cone;
  std::vector<Tuple> tuples;
  std::map<Tuple, Elem> index;

  std::optional<Elem> find(const Tuple& t) const;
};

Limit limit(const SetFunctor& d);

/// Union-find colimit. Classes are numbered in order of their smallest
/// member in the disjoint union (objects in order, then elements).
Cocone colimit(const SetFunctor& d);

/// The single-zigzag colimit formula for pseudo-filtered shapes. Throws
/// NotPseudoFiltered with the violating pair otherwise.
Cocone filtered_colimit(const SetFunctor& d);

/// Pullback of X --f--> Z <--g-- Y. Apex is {(x, y) | f(x) = g(y)} in
/// lexicographic order; legs[0] goes to X, legs[1] to Y, legs[2] to Z.
Cone pullback(const FinFunction& f, const FinFunction& g);
/// Finite product of sets; tuples in lexicographic order.
Cone product(const std::vector<FinSet>& factors);
/// Equalizer of f, g: X -> Y as the subset {x | f(x) = g(x)}; legs[0] is the
/// inclusion into X, legs[1] the map into Y.
Cone equalizer(const FinFunction& f, const FinFunction& g);
Cone terminal();

/// Set-valued diagrams of the standard shapes.
SetFunctor cospan_diagram(const FinFunction& f, const FinFunction& g);
SetFunctor parallel_pair_diagram(const FinFunction& f, const FinFunction& g);
SetFunctor discrete_diagram(const std::vector<FinSet>& sets);

/// Throws NotACone naming a morphism whose triangle fails.
void check_cone(const Cone& c, const SetFunctor& d);
void check_cocone(const Cocone& c, const SetFunctor& d);

/// True iff the comparison map from the apex to the limit is a bijection.
/// Throws NotACone when the legs do not commute.
bool is_limiting_cone(const Cone& c, const SetFunctor& d);

/// Componentwise pullback of two natural transformations with a common
/// codomain: P = X ×_Z Y with projections to X and Y.
struct FunctorPullback {
  SetFunctor apex;
  NatTrans to_left;   // P -> X
  NatTrans to_right;  // P -> Y
};

FunctorPullback pullback(const NatTrans& f, const NatTrans& g);

/// The map W -> P into a componentwise pullback with the given legs.
/// Throws SquareNotCommutative when the legs do not land in P.
NatTrans pullback_pairing(const FunctorPullback& pb, const NatTrans& left, const NatTrans& right);

/// True iff the square  P --p--> Y, P --q--> X, g·p = f·q  (f: X -> Z,
/// g: Y -> Z) is a pullback in every component.
bool is_pullback_square(const NatTrans& q, const NatTrans& p, const NatTrans& f, const NatTrans& g);

}  // namespace fcat
