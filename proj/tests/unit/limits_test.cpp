#include <gtest/gtest.h>

#include "fcat/error.hpp"
#include "fcat/generators.hpp"
#include "fcat/limits.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fcat;

namespace {

/// The partition of the disjoint union induced by a cocone's legs,
/// renumbered by smallest member.
std::vector<std::size_t> partition_of(const Cocone& c, const SetFunctor& d) {
  std::vector<std::size_t> out;
  std::map<Elem, std::size_t> renumber;
  for (Obj o = 0; o < d.shape->num_objects(); ++o)
    for (Elem x = 0; x < d.size(o); ++x) out.push_back(renumber.emplace(c.legs[o](x), renumber.size()).first->second);
  return out;
}

}  // namespace

TEST(Limits, LimitIsCompatibleTuples) {
  Rng rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const CategoryPtr c = trial % 5 == 0 ? parallel_pair_category() : random_poset(rng, 4);
    const SetFunctor d = random_set_functor(rng, c, 3);
    const Limit lim = limit(d);
    EXPECT_EQ(lim.tuples, oracle::limit_tuples(d));
    EXPECT_EQ(lim.cone.apex.size, lim.tuples.size());
    EXPECT_NO_THROW(check_cone(lim.cone, d));
    EXPECT_TRUE(is_limiting_cone(lim.cone, d));
  }
}

TEST(Limits, ColimitPartitionMatchesOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const CategoryPtr c = trial % 4 == 0 ? split_idempotent_category() : random_poset(rng, 4);
    const SetFunctor d = random_set_functor(rng, c, 3);
    const Cocone cc = colimit(d);
    EXPECT_NO_THROW(check_cocone(cc, d));
    EXPECT_EQ(partition_of(cc, d), oracle::colimit_classes(d));
    EXPECT_EQ(cc.nadir.size, oracle::colimit_size(d));
  }
}

TEST(Limits, FilteredColimitAgreesOnPseudoFilteredShapes) {
  Rng rng(4);
  for (const auto& c : pseudo_filtered_shapes(4))
    for (int trial = 0; trial < 5; ++trial) {
      const SetFunctor d = random_set_functor(rng, c, 3);
      const Cocone a = filtered_colimit(d);
      const Cocone b = colimit(d);
      EXPECT_NO_THROW(check_cocone(a, d));
      EXPECT_EQ(partition_of(a, d), partition_of(b, d));
    }
}

TEST(Limits, FilteredColimitRejectsOtherShapes) {
  const SetFunctor d = parallel_pair_diagram(FinFunction(2, 2, {0, 1}), FinFunction(2, 2, {1, 0}));
  try {
    filtered_colimit(d);
    FAIL() << "expected NotPseudoFiltered";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPseudoFiltered);
  }
  EXPECT_EQ(colimit(d).nadir.size, 1u);
}

TEST(Limits, StandardShapes) {
  testing_support::ColimitExample ex;
  EXPECT_EQ(colimit(ex.m).nadir.size, 1u);
  const Cone pb = pullback(ex.psi.at(0), ex.phi.at(0));
  EXPECT_EQ(pb.apex.size, 0u);
  EXPECT_EQ(product({}).apex.size, 1u);
  EXPECT_EQ(terminal().apex.size, 1u);
  EXPECT_EQ(product({FinSet(2), FinSet(3), FinSet(2)}).apex.size, 12u);
  const FinFunction f(4, 3, {0, 1, 2, 2});
  EXPECT_EQ(equalizer(f, f).apex.size, 4u);
  EXPECT_EQ(equalizer(f, FinFunction(4, 3, {0, 2, 2, 1})).apex.size, 2u);
  const Cone p = pullback(FinFunction(3, 2, {0, 1, 1}), FinFunction(2, 2, {1, 1}));
  EXPECT_EQ(p.apex.size, 4u);
  EXPECT_EQ(limit(cospan_diagram(FinFunction(3, 2, {0, 1, 1}), FinFunction(2, 2, {1, 1}))).tuples.size(), 4u);
  EXPECT_EQ(limit(discrete_diagram({FinSet(2), FinSet(3)})).tuples.size(), 6u);
}

TEST(Limits, NonLimitingConeIsDetected) {
  const SetFunctor d = discrete_diagram({FinSet(2), FinSet(2)});
  const Cone diag{FinSet(2), {FinFunction::identity(2), FinFunction::identity(2)}};
  EXPECT_FALSE(is_limiting_cone(diag, d));
  const SetFunctor cs = cospan_diagram(FinFunction(1, 2, {0}), FinFunction(1, 2, {1}));
  const Cone bad{FinSet(1), {FinFunction(1, 1, {0}), FinFunction(1, 1, {0}), FinFunction(1, 2, {0})}};
  EXPECT_THROW(check_cone(bad, cs), Error);
}

TEST(Limits, FunctorPullbackIsComponentwise) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const CategoryPtr c = random_poset(rng, 3);
    const SetFunctor x = random_set_functor(rng, c, 2);
    const SetFunctor y = random_set_functor(rng, c, 2);
    const SetFunctor z = random_set_functor(rng, c, 2);
    auto f = random_nat_trans(rng, x, z);
    auto g = random_nat_trans(rng, y, z);
    if (!f || !g) continue;
    const FunctorPullback pb = pullback(*f, *g);
    for (Obj o = 0; o < c->num_objects(); ++o) {
      std::size_t n = 0;
      for (Elem a = 0; a < x.size(o); ++a)
        for (Elem b = 0; b < y.size(o); ++b)
          if (f->at(o)(a) == g->at(o)(b)) ++n;
      EXPECT_EQ(pb.apex.size(o), n);
    }
    EXPECT_TRUE(is_pullback_square(pb.to_left, pb.to_right, *f, *g));
    EXPECT_EQ(pullback_pairing(pb, pb.to_left, pb.to_right), identity_nat(pb.apex));
  }
}
