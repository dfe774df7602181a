#include <gtest/gtest.h>

#include <random>
#include <set>

#include "setalg/matrix.hpp"
#include "setalg/rational.hpp"
#include "setalg/subset.hpp"
#include "support/oracles.hpp"

using namespace setalg;

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), Error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_EQ(to_string(parse_rational("12/3")), "4");
  EXPECT_EQ(to_string(make_rational(-1, 2)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, ArithmeticIsExact) {
  Rational sum = 0;
  for (int i = 1; i <= 50; ++i) sum += make_rational(1, i * (i + 1));
  EXPECT_EQ(sum, make_rational(50, 51));
}

TEST(Subset, BasicSetOperations) {
  const Subset a = Subset::of({0, 2, 5});
  const Subset b = Subset::of({2, 3});
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ((a | b).members(), (std::vector<int>{0, 2, 3, 5}));
  EXPECT_EQ((a & b).members(), (std::vector<int>{2}));
  EXPECT_EQ((a - b).members(), (std::vector<int>{0, 5}));
  EXPECT_TRUE(Subset::of({2}).subset_of(a));
  EXPECT_EQ(a.span_size(), 6);
  EXPECT_EQ(Subset::full(64).size(), 64);
}

TEST(Subset, KsubsetsSmallCases) {
  EXPECT_EQ(ksubsets(3, 0), std::vector<Subset>{Subset{}});
  EXPECT_EQ(ksubsets(3, 2), (std::vector<Subset>{Subset::of({0, 1}), Subset::of({0, 2}), Subset::of({1, 2})}));
  EXPECT_EQ(ksubsets(8, 4).size(), oracle::binomial(8, 4).get_ui());
  EXPECT_TRUE(ksubsets(3, 4).empty());
}

TEST(Subset, KsubsetsCountDistinctAndColex) {
  for (int l = 0; l <= 12; ++l) {
    for (int k = 0; k <= l; ++k) {
      const std::vector<Subset> all = ksubsets(l, k);
      ASSERT_EQ(all.size(), oracle::binomial(l, k).get_ui()) << l << " " << k;
      const std::set<Subset> distinct(all.begin(), all.end());
      EXPECT_EQ(distinct.size(), all.size());
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      for (std::size_t i = 0; i < all.size(); ++i) {
        ASSERT_EQ(all[i].size(), k);
        ASSERT_EQ(colex_rank(all[i]), i);
        ASSERT_EQ(colex_unrank(i, k), all[i]);
      }
    }
  }
}

TEST(Subset, BinomialMatchesProductFormula) {
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) ASSERT_EQ(Integer(std::to_string(binomial(n, k))), oracle::binomial(n, k));
  }
  EXPECT_EQ(binomial(5, 7), 0U);
}

TEST(Subset, Splits) {
  const auto pairs = splits(Subset::of({0, 1}), 1);
  ASSERT_EQ(pairs.size(), 2U);
  EXPECT_EQ(pairs[0], std::make_pair(Subset::of({0}), Subset::of({1})));
  EXPECT_EQ(pairs[1], std::make_pair(Subset::of({1}), Subset::of({0})));
  const auto whole = splits(Subset::of({0, 1, 2}), 0);
  ASSERT_EQ(whole.size(), 1U);
  EXPECT_EQ(whole[0].second, Subset::of({0, 1, 2}));
  EXPECT_EQ(splits(Subset::of({1, 3, 4, 7, 9}), 2).size(), oracle::binomial(5, 2).get_ui());
  EXPECT_TRUE(splits(Subset::of({1}), 2).empty());
}

TEST(Subset, SplitsSwapBijection) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Subset q(rng() & 0xFFF);
    for (int m = 0; m <= q.size(); ++m) {
      const auto a = splits(q, m);
      auto b = splits(q, q.size() - m);
      std::set<std::pair<Subset, Subset>> swapped;
      for (const auto& [p, r] : b) swapped.insert({r, p});
      ASSERT_EQ((std::set<std::pair<Subset, Subset>>(a.begin(), a.end())), swapped);
      for (const auto& [p, r] : a) {
        ASSERT_EQ(p | r, q);
        ASSERT_FALSE(p.intersects(r));
      }
    }
  }
}

TEST(SetFamily, DeduplicatesAndChecksGround) {
  SetFamily fam(4);
  EXPECT_TRUE(fam.add(Subset::of({0, 1})));
  EXPECT_FALSE(fam.add(Subset::of({0, 1})));
  EXPECT_TRUE(fam.contains(Subset::of({0, 1})));
  EXPECT_EQ(fam.size(), 1U);
  EXPECT_THROW(fam.united(SetFamily(5)), Error);
}

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_cap) {
  // Product of random rows x rank_cap and rank_cap x cols factors.
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  RationalMatrix a(rows, rank_cap);
  RationalMatrix b(rank_cap, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rank_cap; ++j) a(i, j) = make_rational(num(rng), den(rng));
  }
  for (std::size_t i = 0; i < rank_cap; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = make_rational(num(rng), den(rng));
  }
  return a * b;
}

}  // namespace

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4U);
  EXPECT_EQ(rank(from_rows({{1}, {1}, {1}})), 1U);
  EXPECT_EQ(rank(RationalMatrix(0, 3)), 0U);
}

TEST(Matrix, NullspaceExamples) {
  const auto basis = nullspace_basis(from_rows({{1, 1}}));
  ASSERT_EQ(basis.size(), 1U);
  EXPECT_EQ(basis[0], (RationalVector{1, -1}));
  EXPECT_TRUE(nullspace_basis(from_rows({{2, 1}, {1, 1}})).empty());
}

TEST(Matrix, LabelsMustMatch) {
  RationalMatrix m(2, 3);
  EXPECT_THROW(m.set_labels({Subset{}}, {}), Error);
  EXPECT_NO_THROW(m.set_labels({Subset::of({0}), Subset::of({1})}, {}));
}

TEST(Matrix, RankAgreesWithGaussJordanAndRankNullity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const std::size_t cap = 1 + rng() % 6;
    RationalMatrix m = random_matrix(rng, rows, cols, cap);
    const std::size_t r = rank(m);
    ASSERT_EQ(r, oracle::rank(to_rows(m)));
    const auto basis = nullspace_basis(m);
    ASSERT_EQ(r + basis.size(), m.cols());
    for (const RationalVector& x : basis) {
      const RationalVector mx = m.apply(x);
      for (const Rational& v : mx) ASSERT_EQ(v, 0);
      const auto first = std::find_if(x.begin(), x.end(), [](const Rational& v) { return v != 0; });
      ASSERT_NE(first, x.end());
      ASSERT_EQ(*first, 1);
    }
    // The basis is independent.
    std::vector<std::vector<Rational>> stacked(basis.begin(), basis.end());
    ASSERT_EQ(oracle::rank(stacked), basis.size());
  }
}

TEST(Matrix, BareissHandlesLargeEntriesExactly) {
  // Hilbert matrices are notoriously ill-conditioned but nonsingular.
  const std::size_t n = 9;
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = make_rational(1, static_cast<long>(i + j + 1));
  }
  EXPECT_EQ(rank(h), n);
  EXPECT_TRUE(nullspace_basis(h).empty());
}
