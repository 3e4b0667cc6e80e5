#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fcat/category.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

using Rng = std::mt19937_64;

// Deterministic builders ------------------------------------------------------

/// The poset on objects "0".."n-1" with i <= j whenever (i, j) is in
/// `relation` or follows from it by transitivity. Throws InvalidArgument for
/// a relation with a cycle of length > 1.
CategoryPtr poset_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relation);

/// One object "*" with morphisms "e0" (the identity) .. "e{n-1}" composed by
/// table[g][f] = g∘f.
CategoryPtr monoid_category(const std::vector<std::vector<std::size_t>>& table);
CategoryPtr cyclic_group_category(std::size_t n);
/// {1, e} with e∘e = e.
CategoryPtr idempotent_monoid_category();

/// The free category on a finite acyclic graph: morphisms are the paths.
CategoryPtr free_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Objects a, b with r: a -> b, s: b -> a and s∘r = 1_a, so e = r∘s is a
/// split idempotent on b.
CategoryPtr split_idempotent_category();

/// All posets on at most `max_objects` elements, one per isomorphism class.
std::vector<CategoryPtr> all_posets(std::size_t max_objects);

/// The pseudo-filtered shapes with at most `max_objects` objects used by the
/// Colim experiments: every pseudo-filtered poset, plus the idempotent
/// monoid and the split idempotent.
std::vector<CategoryPtr> pseudo_filtered_shapes(std::size_t max_objects);

/// A fixed corpus of small categories (posets, free categories on graphs,
/// monoids, split idempotents, truncated simplex categories) with at most
/// `max_objects` objects and `max_morphisms` morphisms.
std::vector<CategoryPtr> category_corpus(std::size_t max_objects, std::size_t max_morphisms);

// Random generation -------------------------------------------------------------

/// A uniformly chosen relation on up to `max_objects` elements, closed to
/// a poset.
CategoryPtr random_poset(Rng& rng, std::size_t max_objects, double edge_probability = 0.4);

/// A random pseudo-filtered poset (resampled until one is found).
CategoryPtr random_pseudo_filtered_poset(Rng& rng, std::size_t max_objects);

/// A random functor on `shape` with every set of size at most `max_set`,
/// built by backtracking over the structure maps. Sizes are resampled when
/// the search exceeds its node budget.
SetFunctor random_set_functor(Rng& rng, const CategoryPtr& shape, std::size_t max_set);

/// A random natural transformation F -> G, or nothing when none exists.
std::optional<NatTrans> random_nat_trans(Rng& rng, const SetFunctor& f, const SetFunctor& g);

/// A random functor B -> A (there is always one: constant at an object).
FinFunctor random_functor(Rng& rng, const CategoryPtr& b, const CategoryPtr& a);

}  // namespace fcat
