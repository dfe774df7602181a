#include <gtest/gtest.h>

#include <random>

#include "setalg/transversal.hpp"
#include "setalg/witnesses.hpp"
#include "support/oracles.hpp"

using namespace setalg;

namespace {

SetFamily random_family(std::mt19937_64& rng, int l, std::size_t count, int max_size) {
  SetFamily fam(l);
  std::uniform_int_distribution<int> point(0, l - 1);
  std::uniform_int_distribution<int> size(1, max_size);
  while (fam.size() < count) {
    Subset s;
    const int k = size(rng);
    while (s.size() < k) s = s.with(point(rng));
    fam.add(s);
  }
  return fam;
}

}  // namespace

TEST(Tau, Singletons) {
  for (int n = 1; n <= 6; ++n) {
    SetFamily fam(2 * n);
    for (int x = 0; x < 2 * n; ++x) fam.add(Subset::of({x}));
    EXPECT_EQ(tau(fam).size, static_cast<std::size_t>(2 * n));
  }
}

TEST(Tau, EmptyFamilyAndEmptyMember) {
  const TransversalResult r = tau(SetFamily(5));
  EXPECT_EQ(r.size, 0U);
  EXPECT_TRUE(r.witness.empty());
  SetFamily bad(3);
  bad.add(Subset{});
  EXPECT_THROW(tau(bad), Error);
}

TEST(Tau, TwoSquares) {
  const WitnessPair pair = two_squares();
  const SetFamily fam = pair.joint_support();
  EXPECT_EQ(tau(fam).size, 7U);
  for (int x = 0; x < 8; ++x) EXPECT_TRUE(is_minimal_transversal(Subset::full(8).without(x), fam));
}

TEST(Tau, Predicates) {
  SetFamily fam(4);
  fam.add(Subset::of({0, 1}));
  fam.add(Subset::of({2, 3}));
  EXPECT_TRUE(is_transversal(Subset::full(4), fam));
  EXPECT_FALSE(is_transversal(Subset{}, fam));
  EXPECT_TRUE(is_minimal_transversal(Subset::of({1, 2}), fam));
  EXPECT_FALSE(is_minimal_transversal(Subset::of({0, 1, 2}), fam));
}

TEST(Tau, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int l = 1 + static_cast<int>(rng() % 12);
    const std::size_t count = 1 + rng() % std::min<std::size_t>(30, (std::size_t{1} << l) - 1);
    const SetFamily fam = random_family(rng, l, count, std::min(l, 4));
    const TransversalResult r = tau(fam);
    ASSERT_EQ(static_cast<int>(r.size), oracle::tau(l, fam.sets())) << "trial " << trial;
    ASSERT_EQ(r.witness.size(), static_cast<int>(r.size));
    ASSERT_TRUE(is_transversal(r.witness, fam));
    ASSERT_LE(r.stats.packing_bound, r.size);
    ASSERT_GE(r.stats.greedy_bound, r.size);
  }
}

TEST(Tau, BoundsFromHeuristics) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const SetFamily fam = random_family(rng, 14, 25, 5);
    const std::size_t t = tau(fam).size;
    const Subset greedy = greedy_transversal(fam);
    ASSERT_TRUE(is_transversal(greedy, fam));
    ASSERT_LE(t, static_cast<std::size_t>(greedy.size()));
    const auto packing = greedy_disjoint_subfamily(fam);
    for (std::size_t i = 0; i < packing.size(); ++i) {
      for (std::size_t j = i + 1; j < packing.size(); ++j) ASSERT_FALSE(packing[i].intersects(packing[j]));
    }
    ASSERT_GE(t, packing.size());
  }
}

TEST(Tau, MonotoneUnderAddingSets) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    SetFamily fam = random_family(rng, 10, 8, 4);
    const std::size_t before = tau(fam).size;
    const SetFamily extra = random_family(rng, 10, 3, 4);
    const SetFamily bigger = fam.united(extra);
    ASSERT_GE(tau(bigger).size, before);
    SetFamily smaller(10);
    for (std::size_t i = 1; i < fam.size(); ++i) smaller.add(fam.sets()[i]);
    ASSERT_LE(tau(smaller).size, before);
  }
}
