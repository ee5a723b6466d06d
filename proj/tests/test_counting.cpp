#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace csf;

namespace {

std::vector<int> shuffled(std::vector<int> v, std::mt19937_64& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace

TEST(StcBrute, CompleteGraphOnTwo) {
  auto k2 = complete_graph(2);
  EXPECT_EQ(stc_brute(k2, Composition({1, 1})), 2);
  EXPECT_EQ(stc_brute(k2, Composition({2})), 0);
  EXPECT_THROW(stc_brute(k2, Composition({1, 1, 1})), PreconditionError);
}

TEST(StcBrute, HalfGraph) {
  EXPECT_EQ(stc_brute(half_graph(6), Composition({4, 4, 4})), 90);
  EXPECT_EQ(stc_brute(half_graph(6), Composition({6, 4, 2})), 32);
  EXPECT_EQ(stc_brute(half_graph(6), Composition({5, 5, 2})), 54);
}

TEST(StcBrute, AgainstAssignmentOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    auto g = oracle::random_graph(rng, n, 0.4);
    for (const auto& p : partitions_of(n)) {
      auto t = shuffled(p.vec(), rng);
      EXPECT_EQ(stc_brute(g, Composition(t)), oracle::stc_assign(g, t));
    }
  }
}

TEST(StcBrute, PermutationInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    auto g = oracle::random_graph(rng, n, 0.3);
    for (const auto& p : partitions_of(n)) {
      Integer sorted = stc_brute(g, p.as_composition());
      EXPECT_EQ(stc_brute(g, Composition(shuffled(p.vec(), rng))), sorted);
    }
  }
}

TEST(StcBrute, SingletonsAndSingleBlock) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 8; ++n) {
    auto g = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(stc_brute(g, Composition(std::vector<int>(static_cast<std::size_t>(n), 1))), factorial(n));
    EXPECT_EQ(stc_brute(g, Composition({n})), g.edge_count() == 0 ? 1 : 0);
    EXPECT_EQ(stc_brute(edgeless_graph(n), Composition({n})), 1);
  }
}

TEST(StcBrute, IsomorphismInvariance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = oracle::random_graph(rng, 9, 0.35);
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = g.relabeled(perm);
    for (const auto& p : partitions_of(9)) EXPECT_EQ(stc_brute(g, p.as_composition()), stc_brute(h, p.as_composition()));
  }
}

TEST(StcBrute, BudgetIsEnforced) {
  auto h = h_graph(7, 3);
  CountOptions tiny{50};
  EXPECT_THROW(stc_brute(h, Composition({7, 6, 4, 2}), tiny), BudgetExceeded);
  try {
    stc_brute(h, Composition({7, 6, 4, 2}), tiny);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 50u);
  }
}

TEST(StcPinned, CompleteGraphOnTwo) {
  auto k2 = complete_graph(2);
  EXPECT_EQ(stc_pinned_brute(k2, Composition({1, 1}), {0, 1, 1, 2}), 1);
  EXPECT_EQ(stc_pinned_brute(k2, Composition({1, 1}), {0, 1, 1, 1}), 0);
  EXPECT_THROW(stc_pinned_brute(k2, Composition({1, 1}), {0, 1, 0, 2}), PreconditionError);
  EXPECT_THROW(stc_pinned_brute(k2, Composition({1, 1}), {0, 3, 1, 1}), PreconditionError);
}

TEST(StcPinned, AgainstAssignmentOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 7)(rng);
    auto g = oracle::random_graph(rng, n, 0.35);
    for (const auto& p : partitions_of(n)) {
      auto t = shuffled(p.vec(), rng);
      int l = static_cast<int>(t.size());
      for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
          EXPECT_EQ(stc_pinned_brute(g, Composition(t), {0, i, n - 1, j}), oracle::stc_assign(g, t, 0, i - 1, n - 1, j - 1));
    }
  }
}

TEST(StcPinned, HalfGraphAsTwoColumnLattice) {
  // h_graph(7, 2) is G_6; with x_1 in the block of size 6 the count is C(5, 2).
  auto h = h_graph(7, 2);
  auto [u, v] = lattice_pins(h);
  EXPECT_EQ(h.label(u), "x1");
  EXPECT_EQ(h.label(v), "y6");
  EXPECT_EQ(stc_pinned_brute(h, Composition({6, 4, 2}), {u, 1, v, 2}), 10);
}

TEST(StcPinned, SplitIdentity) {
  // Every ordering of every partition when the order is at most 12; above
  // that the increasing and decreasing orderings.
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      auto h = h_graph(m, n);
      auto [u, v] = lattice_pins(h);
      for (const auto& p : partitions_of(h.order())) {
        std::vector<std::vector<int>> orders;
        auto t = p.vec();
        std::sort(t.begin(), t.end());
        if (h.order() <= 12) {
          do orders.push_back(t);
          while (std::next_permutation(t.begin(), t.end()));
        } else {
          orders.push_back(t);
          orders.push_back(p.vec());
        }
        for (const auto& o : orders) {
          Composition c(o);
          Integer pinned = 0;
          for (int i = 1; i <= c.length(); ++i)
            for (int j = i + 1; j <= c.length(); ++j) pinned += stc_pinned_brute(h, c, {u, i, v, j});
          EXPECT_EQ(stc_brute(h, c), 2 * pinned) << m << "x" << n << " " << c;
        }
      }
    }
}

TEST(StcPinned, SignaturesMatchDirectPins) {
  for (auto [m, n] : {std::pair{3, 3}, std::pair{4, 3}, std::pair{3, 4}}) {
    auto h = h_graph(m, n);
    auto [u, v] = lattice_pins(h);
    for (const auto& p : partitions_of(h.order())) {
      auto sig = pinned_signatures(h, p, u, v);
      EXPECT_EQ(sig.total, stc_brute(h, p.as_composition()));
      for (const auto& [key, val] : sig.by_sizes) {
        std::vector<int> t = {key.first, key.second};
        auto rest = p.vec();
        rest.erase(std::find(rest.begin(), rest.end(), key.first));
        rest.erase(std::find(rest.begin(), rest.end(), key.second));
        t.insert(t.end(), rest.begin(), rest.end());
        EXPECT_EQ(val, stc_pinned_brute(h, Composition(t), {u, 1, v, 2})) << p;
        EXPECT_EQ(val, oracle::stc_assign(h, t, u, 0, v, 1)) << p;
      }
    }
  }
}
