#include "seqforge/subset.hpp"

#include "../support/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace seqforge {
namespace {

using testing::count_where;

TEST(SubsetTest, RejectsMalformedElements) {
  EXPECT_THROW(Subset({3, 2}), std::invalid_argument);
  EXPECT_THROW(Subset({2, 2}), std::invalid_argument);
  EXPECT_THROW(Subset({0, 4}), std::invalid_argument);
  EXPECT_NO_THROW(Subset({1, 5, 9}));
}

TEST(SubsetTest, DerivedQuantitiesAgreeWithElements) {
  const Subset s{2, 5, 11};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.min(), 2);
  EXPECT_EQ(s.max(), 11);
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(6));
  EXPECT_EQ(Subset::from_mask(s.to_mask()), s);
  EXPECT_EQ(s.to_string(), "{2,5,11}");
}

TEST(DifferenceSetTest, Examples) {
  EXPECT_TRUE(difference_set(Subset{}).empty());
  EXPECT_TRUE(difference_set(Subset{5}).empty());
  EXPECT_EQ(difference_set(Subset{1, 3, 6}), (GapList{2, 3}));
}

TEST(PredicateTest, AlphaSchreier) {
  EXPECT_TRUE(is_alpha_schreier(Subset{}, 3));
  EXPECT_TRUE(is_alpha_schreier(Subset{4, 5}, 2));
  EXPECT_FALSE(is_alpha_schreier(Subset{1, 2}, 1));
  EXPECT_THROW(is_alpha_schreier(Subset{1}, 0), std::invalid_argument);
}

TEST(PredicateTest, AlphaSchreierMatchesRationalTest) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto mask = rng() & ((std::uint64_t{1} << 24) - 1);
    const Subset s = Subset::from_mask(mask);
    const Index alpha = static_cast<Index>(rng() % 6) + 1;
    const bool rational = s.empty() || Rational(s.min(), alpha) >= Rational(static_cast<long>(s.size()));
    EXPECT_EQ(is_alpha_schreier(s, alpha), rational) << s.to_string() << " alpha=" << alpha;
  }
}

TEST(PredicateTest, BetaZeckendorf) {
  EXPECT_TRUE(is_beta_zeckendorf(Subset{7}, 5));
  EXPECT_TRUE(is_beta_zeckendorf(Subset{2, 4}, 2));
  EXPECT_FALSE(is_beta_zeckendorf(Subset{2, 4}, 3));
  EXPECT_TRUE(is_beta_zeckendorf(Subset{}, 9));
}

TEST(MatchesTest, Examples) {
  EXPECT_TRUE(matches(Subset{1, 2, 3}, {.gap_parity = GapParity::all_odd, .min_size = 2}, 3));
  EXPECT_FALSE(matches(Subset{1, 3}, {.gap_parity = GapParity::all_odd}, 3));
  EXPECT_TRUE(matches(Subset{}, {.alpha = 1, .beta = 1}, 5));
}

TEST(MatchesTest, MalformedQueries) {
  EXPECT_THROW(matches(Subset{1, 6}, {}, 5), std::invalid_argument);
  EXPECT_THROW(matches(Subset{1}, {.forced_max = 6}, 5), std::invalid_argument);
  EXPECT_THROW(matches(Subset{1}, {.alpha = 0}, 5), std::invalid_argument);
}

TEST(MatchesTest, NoClausesAcceptsEverything) {
  for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) EXPECT_TRUE(matches(Subset::from_mask(mask), {}, 8));
}

TEST(CountSubsetsTest, Examples) {
  EXPECT_EQ(count_subsets(0, {}), 1);
  EXPECT_EQ(count_subsets(5, {.alpha = 2, .beta = 1}), 6);
  EXPECT_EQ(count_subsets(4, {.gap_parity = GapParity::all_odd, .min_size = 2}), 7);
}

TEST(CountSubsetsTest, RefusesAboveLimit) {
  EXPECT_THROW(count_subsets(31, {}), EnumerationLimitError);
  EXPECT_THROW(count_subsets(11, {}, 10), EnumerationLimitError);
  EXPECT_EQ(count_subsets(10, {}, 10), 1024);
  EXPECT_THROW(count_subsets(5, {}, 63), std::invalid_argument);
}

TEST(CountSubsetsTest, ParallelPathMatchesSequentialFormula) {
  // n = 22 takes the partitioned path; all subsets and alpha = 1 counts have known values.
  EXPECT_EQ(count_subsets(22, {}), BigCount(1ul << 22));
  EXPECT_EQ(count_subsets(22, {.gap_parity = GapParity::all_even, .forced_max = 22}), BigCount(1ul << 10));
}

TEST(EnumerateTest, Examples) {
  EXPECT_EQ(enumerate_subsets(2, {.gap_parity = GapParity::all_even, .forced_max = 2}),
            (std::vector<Subset>{Subset{2}}));
  EXPECT_EQ(enumerate_subsets(3, {.gap_parity = GapParity::all_even, .forced_max = 3}),
            (std::vector<Subset>{Subset{3}, Subset{1, 3}}));
  EXPECT_TRUE(enumerate_subsets(1, {.min_size = 2}).empty());
  EXPECT_THROW(enumerate_subsets(40, {}), EnumerationLimitError);
}

std::vector<Condition> condition_grid() {
  std::vector<Condition> grid;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (GapParity p : {GapParity::any, GapParity::all_odd, GapParity::all_even})
        for (Index k : {0, 2}) {
          Condition c;
          if (a) c.alpha = a;
          if (b) c.beta = b + 1;
          c.gap_parity = p;
          c.min_size = k;
          grid.push_back(c);
        }
  return grid;
}

TEST(CountSubsetsTest, CountEqualsEnumerationLengthOnGrid) {
  for (const Condition& c : condition_grid())
    for (Index n : {0, 1, 5, 9, 14}) {
      EXPECT_EQ(count_subsets(n, c), BigCount(static_cast<unsigned long>(enumerate_subsets(n, c).size())));
    }
}

TEST(CountSubsetsTest, AgreesWithRecursiveOracle) {
  for (const Condition& c : condition_grid())
    for (Index n = 0; n <= 12; ++n) {
      const auto expected = count_where(n, [&](const std::vector<std::int64_t>& s) {
        if (c.alpha && !testing::schreier(s, *c.alpha)) return false;
        if (c.beta && !testing::gaps_all(s, [&](std::int64_t g) { return g >= *c.beta; })) return false;
        if (c.gap_parity == GapParity::all_odd && !testing::gaps_all(s, [](std::int64_t g) { return g % 2 == 1; }))
          return false;
        if (c.gap_parity == GapParity::all_even && !testing::gaps_all(s, [](std::int64_t g) { return g % 2 == 0; }))
          return false;
        return static_cast<Index>(s.size()) >= c.min_size;
      });
      EXPECT_EQ(count_subsets(n, c), BigCount(static_cast<long>(expected)));
    }
}

TEST(CountSubsetsTest, MonotoneInN) {
  for (const Condition& c : condition_grid())
    for (Index n = 0; n < 16; ++n) EXPECT_LE(count_subsets(n, c), count_subsets(n + 1, c));
}

TEST(EnumerateTest, IncreasingCharacteristicVectorOrder) {
  const auto all = enumerate_subsets(10, {.gap_parity = GapParity::all_odd});
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].to_mask(), all[i].to_mask());
}

}  // namespace
}  // namespace seqforge
