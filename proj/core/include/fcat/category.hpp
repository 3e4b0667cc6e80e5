#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fcat {

using Obj = std::size_t;
using Mor = std::size_t;

inline constexpr Mor kNoMorphism = std::numeric_limits<Mor>::max();

/// Unvalidated description of a finite category, keyed by string ids.
/// This is what the JSON reader produces and what `validate_category`
/// consumes.
struct RawCategory {
  struct Arrow {
    std::string id;
    std::string dom;
    std::string cod;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::map<std::string, std::string> identities;  // object -> morphism
  std::vector<std::tuple<std::string, std::string, std::string>> compose;  // (g, f, g∘f)
};

/// A finite category given by its full composition table.
///
/// Morphisms are kept in canonical order: by (dom, cod) and then by
/// insertion order. Objects keep their given order. Instances are immutable
/// once built and are normally shared through `CategoryPtr`.
class FinCategory {
 public:
  struct Arrow {
    std::string id;
    Obj dom;
    Obj cod;
  };

  /// Validates an index-level description. `compose(g, f)` must return
  /// g∘f for every composable pair and kNoMorphism otherwise. Morphisms are
  /// re-sorted canonically; `identities[o]` and the values returned by
  /// `compose` refer to the input positions.
  template <class ComposeFn>
  static FinCategory build(std::vector<std::string> objects, std::vector<Arrow> arrows,
                           std::vector<Mor> identities, ComposeFn&& compose_fn) {
    const std::size_t m = arrows.size();
    std::vector<Mor> table(m * m, kNoMorphism);
    for (Mor g = 0; g < m; ++g)
      for (Mor f = 0; f < m; ++f)
        if (arrows[f].cod == arrows[g].dom) table[g * m + f] = compose_fn(g, f);
    return FinCategory(std::move(objects), std::move(arrows), std::move(identities),
                       std::move(table));
  }

  /// Validates a table built with explicit (g, f) -> g∘f entries, indices
  /// referring to input positions. Entries for non-composable pairs or
  /// missing entries for composable ones are reported.
  static FinCategory from_entries(std::vector<std::string> objects, std::vector<Arrow> arrows,
                                  std::vector<Mor> identities,
                                  const std::vector<std::tuple<Mor, Mor, Mor>>& entries);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return arrows_.size(); }

  const std::string& object_name(Obj o) const { return objects_[o]; }
  const std::string& morphism_id(Mor f) const { return arrows_[f].id; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  Obj dom(Mor f) const { return arrows_[f].dom; }
  Obj cod(Mor f) const { return arrows_[f].cod; }
  Mor identity(Obj o) const { return identities_[o]; }
  bool is_identity(Mor f) const { return identities_[dom(f)] == f; }

  /// g∘f, or kNoMorphism when cod(f) != dom(g).
  Mor compose(Mor g, Mor f) const { return table_[g * arrows_.size() + f]; }

  /// Morphisms a -> b in canonical order.
  const std::vector<Mor>& hom(Obj a, Obj b) const { return homs_[a * objects_.size() + b]; }

  std::optional<Obj> find_object(const std::string& name) const;
  std::optional<Mor> find_morphism(const std::string& id) const;
  Obj object(const std::string& name) const;
  Mor morphism(const std::string& id) const;

  /// True iff every hom-set has at most one element.
  bool is_preorder() const;

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  FinCategory(std::vector<std::string> objects, std::vector<Arrow> arrows,
              std::vector<Mor> identities, std::vector<Mor> table);

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<Mor> identities_;
  std::vector<Mor> table_;
  std::vector<std::vector<Mor>> homs_;
  std::map<std::string, Obj> object_index_;
  std::map<std::string, Mor> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

/// Same category, either the same instance or structurally equal.
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

CategoryPtr validate_category(const RawCategory& raw);
RawCategory to_raw(const FinCategory& c);

// Standard index categories ------------------------------------------------

CategoryPtr terminal_category();
/// The linear order 0 < 1 < ... < k-1, one morphism i -> j iff i <= j.
CategoryPtr chain_category(std::size_t k);
CategoryPtr discrete_category(std::size_t n);
/// Two objects 0, 1 and two parallel non-identity arrows a, b: 0 -> 1.
CategoryPtr parallel_pair_category();
/// Objects 0, 1, 2 with u: 0 -> 2 and v: 1 -> 2.
CategoryPtr cospan_category();
/// Objects [0], ..., [n]; morphisms are the weakly monotone maps, named
/// "m->k:v0.v1...". Cached, so repeated calls share one instance.
CategoryPtr delta_truncated(std::size_t n);
/// opposite(delta_truncated(n)), cached.
CategoryPtr delta_truncated_op(std::size_t n);
/// The morphism of delta_truncated(n) (or its opposite) with the given value
/// tuple from [m] to [k].
Mor delta_morphism(const FinCategory& delta, std::size_t m, std::size_t k,
                   const std::vector<std::size_t>& values);
/// The coface d^k_i: [k] -> [k+1] and codegeneracy s^k_j: [k+1] -> [k].
Mor delta_coface(const FinCategory& delta, std::size_t k, std::size_t i);
Mor delta_codegeneracy(const FinCategory& delta, std::size_t k, std::size_t j);

CategoryPtr opposite(const FinCategory& c);
inline CategoryPtr opposite(const CategoryPtr& c) { return opposite(*c); }

// Functors between finite categories ----------------------------------------

struct FinFunctor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<Obj> object_map;
  std::vector<Mor> morphism_map;

  Obj operator()(Obj o) const { return object_map[o]; }
  Mor on_morphism(Mor f) const { return morphism_map[f]; }
};

/// Checks dom/cod, identities and composition; throws on the first violation.
FinFunctor validate_functor(CategoryPtr source, CategoryPtr target, std::vector<Obj> object_map,
                            std::vector<Mor> morphism_map);
FinFunctor identity_functor(const CategoryPtr& c);
/// The unique functor to the terminal category.
FinFunctor to_terminal(const CategoryPtr& c);
/// Full inclusion of delta_truncated_op(m) into delta_truncated_op(n), m <= n.
FinFunctor delta_op_inclusion(std::size_t m, std::size_t n);

/// The comma category (a ↓ K) or (K ↓ a) together with its projection to
/// the source of K.
struct CommaCategory {
  CategoryPtr category;
  FinFunctor projection;
  std::vector<Obj> base;    // comma object -> object b of the source of K
  std::vector<Mor> arrow;   // comma object -> the morphism a -> K(b) (or K(b) -> a)
};

/// Objects are f: a -> K(b) ordered by (b, f); morphisms (b,f) -> (b',f')
/// are v: b -> b' with K(v)∘f = f'.
CommaCategory comma_under(Obj a, const FinFunctor& k);
/// Objects are f: K(b) -> a ordered by (b, f); morphisms (b,f) -> (b',f')
/// are v: b -> b' with f'∘K(v) = f.
CommaCategory comma_over(const FinFunctor& k, Obj a);

// Structural queries ---------------------------------------------------------

/// Component index per object; components are numbered by smallest member.
std::vector<std::size_t> connected_components(const FinCategory& c);

struct PseudoFilteredReport {
  bool ok = true;
  enum class Violation { None, NoCospan, NotCoequalized } violation = Violation::None;
  /// For NoCospan: two objects; for NotCoequalized: two parallel morphisms.
  std::size_t first = 0;
  std::size_t second = 0;
  std::string describe(const FinCategory& c) const;
};

PseudoFilteredReport is_pseudo_filtered(const FinCategory& c);

/// Exhaustive left-cancellation test for u.
bool is_mono_in_category(const FinCategory& c, Mor u);

/// An isomorphism of categories, if one exists.
std::optional<FinFunctor> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b);

}  // namespace fcat
