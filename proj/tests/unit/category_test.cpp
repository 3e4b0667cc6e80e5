#include <gtest/gtest.h>

#include "fcat/category.hpp"
#include "fcat/error.hpp"
#include "fcat/generators.hpp"
#include "oracles.hpp"

using namespace fcat;

namespace {

RawCategory two_raw() {
  RawCategory raw;
  raw.objects = {"0", "1"};
  raw.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"u", "0", "1"}};
  raw.identities = {{"0", "id0"}, {"1", "id1"}};
  raw.compose = {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"u", "id0", "u"}, {"id1", "u", "u"}};
  return raw;
}

ErrorCode code_of(const RawCategory& raw) {
  try {
    validate_category(raw);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorCode::InternalInvariant;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Category, TwoFromRawDescription) {
  const CategoryPtr c = validate_category(two_raw());
  EXPECT_EQ(c->num_objects(), 2u);
  EXPECT_EQ(c->num_morphisms(), 3u);
  const Mor u = c->morphism("u");
  EXPECT_EQ(c->hom(0, 1), std::vector<Mor>{u});
  EXPECT_TRUE(c->hom(1, 0).empty());
  EXPECT_TRUE(oracle::is_category(*c));
  EXPECT_TRUE(same_category(c, validate_category(to_raw(*c))));
}

TEST(Category, ValidationErrors) {
  auto raw = two_raw();
  raw.identities.erase("1");
  EXPECT_EQ(code_of(raw), ErrorCode::MissingIdentity);

  raw = two_raw();
  raw.morphisms.push_back({"w", "0", "2"});
  EXPECT_EQ(code_of(raw), ErrorCode::DanglingDomain);

  raw = two_raw();
  raw.compose.pop_back();
  EXPECT_EQ(code_of(raw), ErrorCode::PartialCompositionTable);

  raw = two_raw();
  raw.compose.emplace_back("u", "u", "u");
  EXPECT_EQ(code_of(raw), ErrorCode::PartialCompositionTable);

  // (b∘b)∘b = b but b∘(b∘b) = a
  RawCategory m;
  m.objects = {"*"};
  m.morphisms = {{"1", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}};
  m.identities = {{"*", "1"}};
  m.compose = {{"1", "1", "1"}, {"1", "a", "a"}, {"a", "1", "a"}, {"1", "b", "b"}, {"b", "1", "b"},
               {"a", "a", "a"}, {"a", "b", "b"}, {"b", "a", "a"}, {"b", "b", "a"}};
  EXPECT_EQ(code_of(m), ErrorCode::NonAssociative);
}

TEST(Category, ChainHasTriangularMorphismCount) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const CategoryPtr c = chain_category(k);
    EXPECT_EQ(c->num_morphisms(), k * (k + 1) / 2);
    EXPECT_TRUE(c->is_preorder());
    EXPECT_TRUE(oracle::is_category(*c));
  }
  EXPECT_EQ(chain_category(2)->num_morphisms(), 3u);
}

TEST(Category, TruncatedDeltaCountsMonotoneMaps) {
  for (std::size_t n = 0; n <= 3; ++n) {
    const FinCategory& d = *delta_truncated(n);
    std::size_t expected = 0;
    for (std::size_t m = 0; m <= n; ++m)
      for (std::size_t k = 0; k <= n; ++k) {
        std::size_t monotone = 0;
        for (const auto& v : oracle::all_functions(m + 1, k + 1))
          if (std::is_sorted(v.begin(), v.end())) ++monotone;
        EXPECT_EQ(monotone, binomial(m + k + 1, m + 1));
        EXPECT_EQ(d.hom(m, k).size(), monotone);
        expected += monotone;
      }
    EXPECT_EQ(d.num_morphisms(), expected);
  }
  EXPECT_TRUE(oracle::is_category(*delta_truncated(2)));
}

TEST(Category, DeltaOpReversesArrowsAndKeepsIds) {
  const FinCategory& d = *delta_truncated(3);
  const FinCategory& p = *delta_truncated_op(3);
  EXPECT_EQ(delta_truncated_op(3), delta_truncated_op(3));
  EXPECT_EQ(p.num_objects(), 4u);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i <= k + 1; ++i) {
      const Mor f = delta_coface(d, k, i);
      const Mor g = delta_coface(p, k, i);
      EXPECT_EQ(d.morphism_id(f), p.morphism_id(g));
      EXPECT_EQ(d.dom(f), p.cod(g));
      EXPECT_EQ(d.cod(f), p.dom(g));
    }
  EXPECT_TRUE(same_category(opposite(opposite(d)), delta_truncated(3)));
}

TEST(Category, PseudoFilteredMatchesDefinition) {
  std::vector<CategoryPtr> cats = all_posets(4);
  for (const auto& c : category_corpus(3, 9)) cats.push_back(c);
  for (const auto& c : cats) EXPECT_EQ(is_pseudo_filtered(*c).ok, oracle::pseudo_filtered(*c));
  EXPECT_TRUE(is_pseudo_filtered(*chain_category(2)).ok);
  const auto pp = is_pseudo_filtered(*parallel_pair_category());
  EXPECT_FALSE(pp.ok);
  EXPECT_EQ(pp.violation, PseudoFilteredReport::Violation::NotCoequalized);
  const auto cs = is_pseudo_filtered(*discrete_category(2));
  EXPECT_TRUE(cs.ok);
}

TEST(Category, CommaObjectsAreArrowsIntoTheImage) {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const CategoryPtr a = random_poset(rng, 4);
    const CategoryPtr b = random_poset(rng, 3);
    const FinFunctor k = random_functor(rng, b, a);
    for (Obj x = 0; x < a->num_objects(); ++x) {
      std::size_t under = 0;
      std::size_t over = 0;
      for (Obj y = 0; y < b->num_objects(); ++y) {
        under += a->hom(x, k(y)).size();
        over += a->hom(k(y), x).size();
      }
      EXPECT_EQ(comma_under(x, k).category->num_objects(), under);
      EXPECT_EQ(comma_over(k, x).category->num_objects(), over);
      EXPECT_TRUE(oracle::is_category(*comma_under(x, k).category));
    }
  }
}

TEST(Category, FunctorValidation) {
  const CategoryPtr two = chain_category(2);
  const CategoryPtr one = terminal_category();
  EXPECT_NO_THROW(to_terminal(two));
  EXPECT_THROW(validate_functor(one, two, {0}, {1}), Error);
  const FinFunctor inc = delta_op_inclusion(1, 3);
  EXPECT_EQ(inc.object_map.size(), 2u);
  Rng rng(3);
  for (const auto& c : category_corpus(3, 6)) {
    const FinFunctor k = random_functor(rng, c, delta_truncated(1));
    EXPECT_NO_THROW(validate_functor(k.source, k.target, k.object_map, k.morphism_map));
  }
}

TEST(Category, IsomorphismSearch) {
  const CategoryPtr a = poset_category(3, {{0, 1}, {0, 2}});
  const CategoryPtr b = poset_category(3, {{2, 0}, {2, 1}});
  const CategoryPtr c = poset_category(3, {{0, 2}, {1, 2}});
  EXPECT_TRUE(find_isomorphism(a, b).has_value());
  EXPECT_FALSE(find_isomorphism(a, c).has_value());
  EXPECT_TRUE(find_isomorphism(opposite(a), c).has_value());
}

TEST(Category, ConnectedComponentsAndMonos) {
  const CategoryPtr c = poset_category(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(connected_components(*c), (std::vector<std::size_t>{0, 0, 1, 1}));
  const CategoryPtr si = split_idempotent_category();
  EXPECT_TRUE(is_mono_in_category(*si, si->morphism("r")));
  EXPECT_FALSE(is_mono_in_category(*si, si->morphism("s")));
  EXPECT_FALSE(is_mono_in_category(*si, si->morphism("e")));
}
