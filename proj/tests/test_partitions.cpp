#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace csf;

TEST(Partitions, EnumerationSmall) {
  auto p0 = partitions_of(0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_TRUE(p0[0].empty());
  EXPECT_EQ(p0[0].weight(), 0);

  std::vector<Partition> three = {Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
  EXPECT_EQ(partitions_of(3), three);
}

TEST(Partitions, CountsMatchGeneratingFunction) {
  EXPECT_EQ(partitions_of(12).size(), 77u);
  for (int n = 0; n <= 20; ++n)
    EXPECT_EQ(static_cast<long long>(partitions_of(n).size()), oracle::partition_count(n)) << n;
}

TEST(Partitions, EnumerationIsExactAndCanonical) {
  for (int n = 0; n <= 12; ++n) {
    auto ps = partitions_of(n);
    std::set<std::vector<int>> seen;
    for (const auto& p : ps) {
      EXPECT_EQ(p.weight(), n);
      EXPECT_TRUE(seen.insert(p.vec()).second) << "duplicate " << p;
    }
    EXPECT_EQ(seen, oracle::partitions_naive(n));
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1].vec(), ps[i].vec());
  }
}

TEST(Partitions, Validation) {
  EXPECT_THROW(Partition({1, 2}), PreconditionError);
  EXPECT_THROW(Partition({2, 0}), PreconditionError);
  EXPECT_THROW(Composition({1, 0, 2}), PreconditionError);
  EXPECT_NO_THROW(Composition({1, 3, 1}));
  EXPECT_THROW(parse_partition("1,2"), PreconditionError);
  EXPECT_THROW(parse_partition("3,,1"), PreconditionError);
  EXPECT_THROW(parse_partition("3,a"), PreconditionError);
  EXPECT_EQ(parse_partition("6,6,4"), Partition({6, 6, 4}));
  EXPECT_EQ(parse_composition("1,3,1"), Composition({1, 3, 1}));
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(Partition({2}), Partition({1, 1})));
  EXPECT_TRUE(dominates(Partition({2, 1}), Partition({2, 1})));
  EXPECT_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  EXPECT_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  EXPECT_THROW(dominates(Partition({2}), Partition({1})), PreconditionError);
}

TEST(Dominance, PartialOrder) {
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominates(a, a));
      for (const auto& b : ps) {
        if (dominates(a, b) && dominates(b, a)) EXPECT_EQ(a, b);
        if (!dominates(a, b)) continue;
        for (const auto& c : ps)
          if (dominates(b, c)) EXPECT_TRUE(dominates(a, c));
      }
    }
  }
}

TEST(Dominance, CanonicalOrderExtendsDominance) {
  auto ps = partitions_of(9);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(dominates(ps[j], ps[i]));
}

TEST(Underlying, Examples) {
  EXPECT_EQ(underlying_partition(Composition({1, 3, 1})), Partition({3, 1, 1}));
  EXPECT_EQ(underlying_partition(Composition({2, 2})), Partition({2, 2}));
  EXPECT_EQ(underlying_partition(Composition()), Partition());
}

TEST(Underlying, IdempotentAndWeightPreserving) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int left = std::uniform_int_distribution<int>(0, 30)(rng);
    std::vector<int> parts;
    while (left > 0) {
      int p = std::uniform_int_distribution<int>(1, left)(rng);
      parts.push_back(p);
      left -= p;
    }
    Composition c(parts);
    auto p = underlying_partition(c);
    EXPECT_EQ(p.weight(), c.weight());
    EXPECT_EQ(underlying_partition(p.as_composition()), p);
  }
}

TEST(Strips, Examples) {
  using O = StripOrientation;
  EXPECT_TRUE(is_strip(SkewPair(Partition({2}), Partition({1})), O::horizontal));
  EXPECT_TRUE(is_strip(SkewPair(Partition({1, 1}), Partition({1})), O::horizontal));
  EXPECT_TRUE(is_strip(SkewPair(Partition({1, 1}), Partition({1})), O::vertical));
  EXPECT_FALSE(is_strip(SkewPair(Partition({2, 2}), Partition({1})), O::horizontal));
  EXPECT_TRUE(is_strip(SkewPair(Partition({3, 1}), Partition({3, 1})), O::horizontal));
  EXPECT_TRUE(is_strip(SkewPair(Partition({3, 1}), Partition({3, 1})), O::vertical));
  EXPECT_THROW(SkewPair(Partition({2}), Partition({1, 1})), PreconditionError);
}

TEST(Strips, AgreeWithCellSets) {
  for (int n = 0; n <= 10; ++n)
    for (const auto& outer : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& inner : partitions_of(k)) {
          bool contained = inner.length() <= outer.length();
          for (int i = 0; contained && i < inner.length(); ++i)
            contained = inner[static_cast<std::size_t>(i)] <= outer[static_cast<std::size_t>(i)];
          if (!contained) continue;
          SkewPair s(outer, inner);
          EXPECT_EQ(is_strip(s, StripOrientation::horizontal), oracle::strip_by_cells(outer.vec(), inner.vec(), true));
          EXPECT_EQ(is_strip(s, StripOrientation::vertical), oracle::strip_by_cells(outer.vec(), inner.vec(), false));
        }
}
