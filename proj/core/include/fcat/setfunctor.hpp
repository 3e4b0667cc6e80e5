#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcat/category.hpp"
#include "fcat/finset.hpp"

namespace fcat {

/// A functor from a finite category into finite sets.
struct SetFunctor {
  CategoryPtr shape;
  std::vector<FinSet> sets;       // indexed by object
  std::vector<FinFunction> maps;  // indexed by morphism

  const FinSet& at(Obj o) const { return sets[o]; }
  std::size_t size(Obj o) const { return sets[o].size; }
  const FinFunction& on(Mor f) const { return maps[f]; }
  std::vector<std::size_t> sizes() const;
  std::size_t total_size() const;

  /// Equality of shapes, set sizes and structure maps. Labels are ignored.
  friend bool operator==(const SetFunctor& a, const SetFunctor& b);
};

/// A natural transformation between two set-valued functors of one shape.
struct NatTrans {
  SetFunctor source;
  SetFunctor target;
  std::vector<FinFunction> components;  // indexed by object

  const FinFunction& at(Obj o) const { return components[o]; }

  friend bool operator==(const NatTrans& a, const NatTrans& b);
};

/// Throws NotFunction, IdentityViolated or CompositionViolated naming the
/// first failing equation.
SetFunctor validate_set_functor(CategoryPtr shape, std::vector<FinSet> sets,
                                std::vector<FinFunction> maps);
/// Throws ShapeMismatch, NotFunction or NaturalityViolated.
NatTrans validate_nat_trans(SetFunctor source, SetFunctor target,
                            std::vector<FinFunction> components);

/// Every object sent to `set`, every morphism to the identity.
SetFunctor constant_functor(const CategoryPtr& shape, const FinSet& set);
inline SetFunctor terminal_functor(const CategoryPtr& shape) { return constant_functor(shape, FinSet(1)); }
inline SetFunctor empty_functor(const CategoryPtr& shape) { return constant_functor(shape, FinSet(0)); }

/// The covariant representable J(j, -), elements labelled by morphism ids.
SetFunctor representable(const CategoryPtr& shape, Obj j);

NatTrans identity_nat(const SetFunctor& f);
/// Vertical composite beta · alpha.
NatTrans compose(const NatTrans& beta, const NatTrans& alpha);

bool is_epi(const NatTrans& alpha);
bool is_mono(const NatTrans& alpha);
bool is_iso(const NatTrans& alpha);

/// Componentwise (surjection, injection) factorization alpha = m · e.
struct FactorizationResult {
  NatTrans e;
  SetFunctor mid;
  NatTrans m;
};

/// The middle object is the image, realized as the sorted subset of the
/// codomain renumbered from 0.
FactorizationResult factorize(const NatTrans& alpha);

/// Outcome of the diagonal-fill search for a commutative square
///
///     A --e--> B
///     |u       |v
///     C --m--> D
struct OrthogonalityResult {
  enum class Status { Unique, NoDiagonal, MultipleDiagonals };
  Status status = Status::NoDiagonal;
  std::optional<NatTrans> diagonal;  // set for Unique and MultipleDiagonals
  std::optional<NatTrans> second;    // set for MultipleDiagonals
  std::string witness;               // human-readable reason when not Unique

  bool unique() const { return status == Status::Unique; }
};

/// Searches all natural w: B -> C with w·e = u and m·w = v. Throws
/// SquareNotCommutative when v·e != m·u.
OrthogonalityResult check_orthogonal(const NatTrans& e, const NatTrans& m, const NatTrans& u,
                                     const NatTrans& v);

struct Coproduct {
  SetFunctor sum;
  std::vector<NatTrans> injections;
};

/// Objectwise disjoint union, summands laid out in family order.
Coproduct coproduct(const CategoryPtr& shape, const std::vector<SetFunctor>& family);
/// The induced map out of a coproduct; legs[i] : family[i] -> X.
NatTrans copair(const Coproduct& c, const std::vector<NatTrans>& legs);

/// Per object, per element of F, the values a component may take. An
/// empty list means "any element of G".
using Candidates = std::vector<std::vector<std::vector<Elem>>>;

struct NatSearchOptions {
  const Candidates* allowed = nullptr;
  /// Optional reordering of the candidate list tried for each element.
  std::function<void(std::vector<Elem>&)> shuffle;
};

/// Backtracking enumeration of natural transformations F -> G. `visit`
/// returns false to stop early.
void search_nat_trans(const SetFunctor& f, const SetFunctor& g, const NatSearchOptions& options,
                      const std::function<bool(const NatTrans&)>& visit);

/// |Nat(F, G)|, saturating at `cap`.
std::size_t count_nat_trans(const SetFunctor& f, const SetFunctor& g, std::size_t cap);

/// Inclusions of all subfunctors of F (at most `cap` of them), in
/// lexicographic order of their per-object membership masks.
std::vector<NatTrans> subfunctor_inclusions(const SetFunctor& f, std::size_t cap);

}  // namespace fcat
