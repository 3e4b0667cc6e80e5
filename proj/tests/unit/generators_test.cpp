#include <gtest/gtest.h>

#include "fcat/generators.hpp"
#include "oracles.hpp"

using namespace fcat;

TEST(Generators, PosetsUpToIsomorphism) {
  // unlabelled posets on 1..4 points: 1, 2, 5, 16
  const std::vector<std::size_t> expected{1, 2, 5, 16};
  const auto all = all_posets(4);
  std::vector<std::size_t> by_size(4, 0);
  for (const auto& c : all) {
    ASSERT_GE(c->num_objects(), 1u);
    ++by_size[c->num_objects() - 1];
    EXPECT_TRUE(c->is_preorder());
    EXPECT_TRUE(oracle::is_category(*c));
  }
  EXPECT_EQ(by_size, expected);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(find_isomorphism(all[i], all[j]).has_value());
}

TEST(Generators, PseudoFilteredShapesArePseudoFiltered) {
  for (const auto& c : pseudo_filtered_shapes(4)) EXPECT_TRUE(oracle::pseudo_filtered(*c));
  Rng rng(1);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(oracle::pseudo_filtered(*random_pseudo_filtered_poset(rng, 5)));
}

TEST(Generators, CorpusRespectsBoundsAndLaws) {
  const auto corpus = category_corpus(3, 9);
  EXPECT_GT(corpus.size(), 20u);
  bool has_non_preorder = false;
  for (const auto& c : corpus) {
    EXPECT_LE(c->num_objects(), 3u);
    EXPECT_LE(c->num_morphisms(), 9u);
    EXPECT_TRUE(oracle::is_category(*c));
    has_non_preorder = has_non_preorder || !c->is_preorder();
  }
  EXPECT_TRUE(has_non_preorder);
}

TEST(Generators, NamedCategories) {
  EXPECT_EQ(cyclic_group_category(3)->num_morphisms(), 3u);
  EXPECT_TRUE(oracle::is_category(*cyclic_group_category(4)));
  EXPECT_TRUE(oracle::is_category(*idempotent_monoid_category()));
  EXPECT_TRUE(oracle::is_category(*split_idempotent_category()));
  const CategoryPtr free = free_category(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(free->hom(0, 2).size(), 2u);
  EXPECT_EQ(poset_category(3, {{0, 1}, {1, 2}})->num_morphisms(), 6u);
}

TEST(Generators, RandomGenerationIsDeterministic) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 20; ++i) {
    const CategoryPtr ca = random_poset(a, 4);
    const CategoryPtr cb = random_poset(b, 4);
    EXPECT_TRUE(same_category(ca, cb));
    const SetFunctor fa = random_set_functor(a, ca, 3);
    const SetFunctor fb = random_set_functor(b, cb, 3);
    EXPECT_EQ(fa, fb);
    for (std::size_t o = 0; o < ca->num_objects(); ++o) EXPECT_LE(fa.size(o), 3u);
  }
}
