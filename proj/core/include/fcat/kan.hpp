#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcat/limits.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

/// S∘K for K: B -> A and S on A.
SetFunctor restrict(const FinFunctor& k, const SetFunctor& s);
/// Whiskering of alpha: S -> S' by K.
NatTrans restrict(const FinFunctor& k, const NatTrans& alpha);

/// The comma categories of K at every object of its target, with lookup
/// from (b, f) to the comma object. Shared by the Kan extension routines.
class CommaTable {
 public:
  enum class Side { Under, Over };

  CommaTable(FinFunctor k, Side side);

  const FinFunctor& functor() const { return k_; }
  Side side() const { return side_; }
  const CommaCategory& at(Obj a) const { return commas_[a]; }
  /// Index of the comma object (b, f) over a, if present.
  std::optional<std::size_t> find(Obj a, Obj b, Mor f) const;
  std::size_t index(Obj a, Obj b, Mor f) const;

  /// T∘Q on the comma category at a.
  SetFunctor diagram(Obj a, const SetFunctor& t) const;

 private:
  FinFunctor k_;
  Side side_;
  std::vector<CommaCategory> commas_;
  std::vector<std::map<std::pair<Obj, Mor>, std::size_t>> lookup_;
};

/// Ran_K(T) together with the limits it was computed from: at each object a
/// of A the elements are the compatible tuples indexed by the objects of
/// (a ↓ K).
struct PointwiseRan {
  std::shared_ptr<const CommaTable> commas;
  std::vector<Limit> limits;
  SetFunctor functor;
};

/// Lan_K(T): at each object a the classes of pairs ((b, f), x) with
/// f: K(b) -> a and x in T(b).
struct PointwiseLan {
  std::shared_ptr<const CommaTable> commas;
  std::vector<Cocone> colimits;
  SetFunctor functor;
};

PointwiseRan ran_pointwise(const FinFunctor& k, const SetFunctor& t);
PointwiseRan ran_pointwise(std::shared_ptr<const CommaTable> commas, const SetFunctor& t);
PointwiseLan lan_pointwise(const FinFunctor& k, const SetFunctor& t);
PointwiseLan lan_pointwise(std::shared_ptr<const CommaTable> commas, const SetFunctor& t);

SetFunctor ran(const FinFunctor& k, const SetFunctor& t);
SetFunctor lan(const FinFunctor& k, const SetFunctor& t);

/// θ_S: S -> Ran_K(S∘K), the tuple (S(f)(x)) over (a ↓ K).
NatTrans unit_ran(const FinFunctor& k, const SetFunctor& s);
/// ε_T: Ran_K(T)∘K -> T, the coordinate at (b, 1_{K(b)}).
NatTrans counit_ran(const FinFunctor& k, const SetFunctor& t);
/// T -> Lan_K(T)∘K, x in T(b) goes to the class of ((b, 1_{K(b)}), x).
NatTrans unit_lan(const FinFunctor& k, const SetFunctor& t);
/// Lan_K(S∘K) -> S, the class of ((b, f), x) goes to S(f)(x).
NatTrans counit_lan(const FinFunctor& k, const SetFunctor& s);

/// An adjunction F ⊣ G between Set^X (the domain, where the unit lives)
/// and Set^Y.
class Adjunction {
 public:
  virtual ~Adjunction() = default;

  virtual std::string name() const = 0;
  /// Shape of the functors F is applied to.
  virtual CategoryPtr domain_shape() const = 0;
  /// Shape of the functors G is applied to.
  virtual CategoryPtr codomain_shape() const = 0;

  virtual SetFunctor left(const SetFunctor& c) const = 0;
  virtual NatTrans left(const NatTrans& f) const = 0;
  virtual SetFunctor right(const SetFunctor& d) const = 0;
  virtual NatTrans right(const NatTrans& f) const = 0;

  /// θ_C: C -> GF(C).
  virtual NatTrans unit(const SetFunctor& c) const = 0;
  /// ε_D: FG(D) -> D.
  virtual NatTrans counit(const SetFunctor& d) const = 0;
};

using AdjunctionPtr = std::shared_ptr<const Adjunction>;

/// Set^K ⊣ Ran_K : Set^A -> Set^B.
class RanAdjunction : public Adjunction {
 public:
  explicit RanAdjunction(FinFunctor k);

  std::string name() const override { return "ran"; }
  CategoryPtr domain_shape() const override { return k_.target; }
  CategoryPtr codomain_shape() const override { return k_.source; }
  const FinFunctor& functor() const { return k_; }

  SetFunctor left(const SetFunctor& c) const override;
  NatTrans left(const NatTrans& f) const override;
  SetFunctor right(const SetFunctor& d) const override;
  NatTrans right(const NatTrans& f) const override;
  NatTrans unit(const SetFunctor& c) const override;
  NatTrans counit(const SetFunctor& d) const override;

 private:
  FinFunctor k_;
  std::shared_ptr<const CommaTable> commas_;
};

/// Lan_K ⊣ Set^K : Set^B -> Set^A. Along K = !: J -> 1 this is Colim ⊣ Δ.
class LanAdjunction : public Adjunction {
 public:
  explicit LanAdjunction(FinFunctor k);

  std::string name() const override { return "lan"; }
  CategoryPtr domain_shape() const override { return k_.source; }
  CategoryPtr codomain_shape() const override { return k_.target; }
  const FinFunctor& functor() const { return k_; }

  SetFunctor left(const SetFunctor& c) const override;
  NatTrans left(const NatTrans& f) const override;
  SetFunctor right(const SetFunctor& d) const override;
  NatTrans right(const NatTrans& f) const override;
  NatTrans unit(const SetFunctor& c) const override;
  NatTrans counit(const SetFunctor& d) const override;

 private:
  FinFunctor k_;
  std::shared_ptr<const CommaTable> commas_;
};

/// 1 ⊣ 1 on Set^C.
class IdentityAdjunction : public Adjunction {
 public:
  explicit IdentityAdjunction(CategoryPtr shape) : shape_(std::move(shape)) {}

  std::string name() const override { return "identity"; }
  CategoryPtr domain_shape() const override { return shape_; }
  CategoryPtr codomain_shape() const override { return shape_; }

  SetFunctor left(const SetFunctor& c) const override { return c; }
  NatTrans left(const NatTrans& f) const override { return f; }
  SetFunctor right(const SetFunctor& d) const override { return d; }
  NatTrans right(const NatTrans& f) const override { return f; }
  NatTrans unit(const SetFunctor& c) const override { return identity_nat(c); }
  NatTrans counit(const SetFunctor& d) const override { return identity_nat(d); }

 private:
  CategoryPtr shape_;
};

/// Colim ⊣ Δ for diagrams of shape J.
AdjunctionPtr colim_adjunction(const CategoryPtr& j);

struct TriangleFailure {
  enum class Identity { Left, Right };  // εF·Fθ = 1 and Gε·θG = 1
  Identity identity;
  std::size_t probe;
  Obj object;
  std::string detail;
};

struct TriangleReport {
  std::size_t checked = 0;
  std::vector<TriangleFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks εF·Fθ = 1_F on every probe of the domain and Gε·θG = 1_G on every
/// probe of the codomain. Errors raised while evaluating a probe are
/// recorded as failures.
TriangleReport verify_triangle_identities(const Adjunction& adj,
                                          const std::vector<SetFunctor>& domain_probes,
                                          const std::vector<SetFunctor>& codomain_probes);

/// |Nat(F C, D)| and |Nat(C, G D)|, each saturating at `cap`.
struct HomSetCounts {
  std::size_t left = 0;
  std::size_t right = 0;
};

HomSetCounts hom_set_counts(const Adjunction& adj, const SetFunctor& c, const SetFunctor& d,
                            std::size_t cap);

/// Whether the objects K(b) cogenerate A: every parallel pair f != g is
/// separated by some h: a -> K(b). On failure the pair is returned.
struct CogeneratingResult {
  bool cogenerating = true;
  std::optional<std::pair<Mor, Mor>> inseparable;
};

CogeneratingResult is_cogenerating(const FinFunctor& k);

}  // namespace fcat
