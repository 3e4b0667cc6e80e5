#include <gtest/gtest.h>

#include "fcat/generators.hpp"
#include "fcat/kan.hpp"
#include "oracles.hpp"

using namespace fcat;

namespace {

struct Instance {
  FinFunctor k;
  SetFunctor on_a;
  SetFunctor on_b;
};

Instance random_instance(Rng& rng, std::size_t max_objects, std::size_t max_set) {
  const CategoryPtr a = random_poset(rng, max_objects);
  const CategoryPtr b = random_poset(rng, max_objects);
  FinFunctor k = random_functor(rng, b, a);
  return {k, random_set_functor(rng, a, max_set), random_set_functor(rng, b, max_set)};
}

}  // namespace

TEST(Kan, RanSizesMatchYonedaCount) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng, 3, 2);
    const SetFunctor r = ran(in.k, in.on_b);
    for (Obj a = 0; a < in.k.target->num_objects(); ++a) EXPECT_EQ(r.size(a), oracle::ran_size(in.k, in.on_b, a));
  }
}

TEST(Kan, LanSizesMatchCoend) {
  Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance in = random_instance(rng, 3, 2);
    const SetFunctor l = lan(in.k, in.on_b);
    for (Obj a = 0; a < in.k.target->num_objects(); ++a) EXPECT_EQ(l.size(a), oracle::lan_size(in.k, in.on_b, a));
  }
}

TEST(Kan, RanAlongPointInclusionIsPowerOfPoints) {
  const FinFunctor k = delta_op_inclusion(0, 3);
  for (std::size_t s = 0; s <= 3; ++s) {
    const SetFunctor t = constant_functor(k.source, FinSet(s));
    const SetFunctor r = ran(k, t);
    std::size_t expected = 1;
    for (std::size_t n = 0; n <= 3; ++n) {
      expected *= s;
      EXPECT_EQ(r.size(n), expected);
    }
  }
}

TEST(Kan, LanAlongTerminalIsColimit) {
  Rng rng(41);
  for (const auto& j : pseudo_filtered_shapes(3)) {
    const SetFunctor t = random_set_functor(rng, j, 3);
    EXPECT_EQ(lan(to_terminal(j), t).size(0), oracle::colimit_size(t));
  }
  const SetFunctor pp = random_set_functor(rng, parallel_pair_category(), 3);
  EXPECT_EQ(lan(to_terminal(parallel_pair_category()), pp).size(0), oracle::colimit_size(pp));
}

TEST(Kan, IdentityAlongIdentity) {
  Rng rng(43);
  const CategoryPtr c = random_poset(rng, 3);
  const SetFunctor t = random_set_functor(rng, c, 3);
  const FinFunctor id = identity_functor(c);
  EXPECT_TRUE(is_iso(unit_ran(id, t)));
  EXPECT_TRUE(is_iso(counit_ran(id, t)));
  EXPECT_TRUE(is_iso(unit_lan(id, t)));
  EXPECT_TRUE(is_iso(counit_lan(id, t)));
  EXPECT_EQ(restrict(id, t), t);
}

TEST(Kan, TriangleIdentitiesAndHomSetCounts) {
  Rng rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance in = random_instance(rng, 3, 2);
    std::vector<SetFunctor> on_a{in.on_a, random_set_functor(rng, in.k.target, 2)};
    std::vector<SetFunctor> on_b{in.on_b, random_set_functor(rng, in.k.source, 2)};
    const RanAdjunction ran_adj(in.k);
    const LanAdjunction lan_adj(in.k);
    EXPECT_TRUE(verify_triangle_identities(ran_adj, on_a, on_b).ok());
    EXPECT_TRUE(verify_triangle_identities(lan_adj, on_b, on_a).ok());
    // Nat(C K, D) = Nat(C, Ran D) and Nat(Lan D, C) = Nat(D, C K)
    const HomSetCounts r = hom_set_counts(ran_adj, in.on_a, in.on_b, 100000);
    EXPECT_EQ(r.left, r.right);
    EXPECT_EQ(r.left, oracle::nat_trans(restrict(in.k, in.on_a), in.on_b).size());
    const HomSetCounts l = hom_set_counts(lan_adj, in.on_b, in.on_a, 100000);
    EXPECT_EQ(l.left, l.right);
    EXPECT_EQ(l.right, oracle::nat_trans(in.on_b, restrict(in.k, in.on_a)).size());
  }
}

TEST(Kan, ColimAdjunctionUnitOnTwo) {
  const CategoryPtr two = chain_category(2);
  const auto adj = colim_adjunction(two);
  const SetFunctor m = validate_set_functor(
      two, {FinSet(2), FinSet(1)}, {FinFunction::identity(2), FinFunction(2, 1, {0, 0}), FinFunction::identity(1)});
  const NatTrans theta = adj->unit(m);
  EXPECT_EQ(theta.at(0), m.on(two->morphism("0<=1")));
  EXPECT_EQ(theta.at(1), FinFunction::identity(1));
  EXPECT_EQ(adj->unit(empty_functor(two)).at(0).domain(), 0u);
}

TEST(Kan, CogeneratingMatchesSeparation) {
  EXPECT_TRUE(is_cogenerating(delta_op_inclusion(0, 3)).cogenerating);
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const CategoryPtr a = trial % 2 ? parallel_pair_category() : split_idempotent_category();
    const CategoryPtr b = discrete_category(1 + trial % 2);
    const FinFunctor k = random_functor(rng, b, a);
    const FinCategory& c = *a;
    bool separated = true;
    for (Mor f = 0; f < c.num_morphisms() && separated; ++f)
      for (Mor g = 0; g < c.num_morphisms() && separated; ++g) {
        if (f == g || c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) continue;
        bool found = false;
        for (Obj y = 0; y < b->num_objects() && !found; ++y)
          for (Mor h : c.hom(c.cod(f), k(y)))
            if (c.compose(h, f) != c.compose(h, g)) found = true;
        separated = found;
      }
    const auto res = is_cogenerating(k);
    EXPECT_EQ(res.cogenerating, separated);
    if (!res.cogenerating) EXPECT_TRUE(res.inseparable.has_value());
  }
}
