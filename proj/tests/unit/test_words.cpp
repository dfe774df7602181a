#include <gtest/gtest.h>

#include <random>

#include "setalg/words.hpp"
#include "setalg/witnesses.hpp"
#include "support/oracles.hpp"

using namespace setalg;

namespace {

Word w(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

Word random_word(std::mt19937_64& rng, int length, int alphabet) {
  std::vector<Letter> letters(static_cast<std::size_t>(length));
  for (Letter& a : letters) a = 1 + static_cast<Letter>(rng() % static_cast<std::uint64_t>(alphabet));
  return Word(letters);
}

// Independent max shuffle: largest over every position set, by brute force.
Word brute_max_shuffle(const Word& u, const Word& v) {
  const int total = static_cast<int>(u.size() + v.size());
  std::optional<Word> best;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << total); ++x) {
    if (std::popcount(x) != static_cast<int>(u.size())) continue;
    const Word s = shuffle(u, Subset(x), v);
    if (!best || lex_compare(s, *best) > 0) best = s;
  }
  return *best;
}

InvStructure blind(const LayeredGround& ground, int m, int n, std::uint64_t seed) {
  return {ground, position_blind_function(ground, m, seed), position_blind_function(ground, n, seed + 1000)};
}

}  // namespace

TEST(Words, RejectEmptyLetters) { EXPECT_THROW(w({1, 0}), Error); }

TEST(Code, Examples) {
  const LayeredGround ground(2, 2, 3);
  const CodedSet in_f = code(Subset::of({0, 1}), ground);
  EXPECT_EQ(in_f.f_part, Subset::of({0, 1}));
  EXPECT_TRUE(in_f.word.empty());

  const Subset q = Subset::of({ground.vc_index(0, 0), ground.vc_index(1, 0), ground.vc_index(0, 2)});
  EXPECT_EQ(code(q, ground).word, w({0b11, 0b01}));
  EXPECT_EQ(code(Subset::of({ground.vc_index(0, 1), ground.vc_index(1, 1)}), ground).word, w({0b11}));
}

TEST(Code, LayoutIsChainMajor) {
  const LayeredGround ground(1, 3, 4);
  EXPECT_EQ(ground.size(), 13);
  EXPECT_EQ(ground.vc_index(0, 0), 1);
  EXPECT_EQ(ground.vc_index(2, 0), 3);
  EXPECT_EQ(ground.vc_index(0, 1), 4);
}

TEST(Radix, Examples) {
  EXPECT_TRUE(radix_compare(w({3}), w({1, 1})) < 0);
  EXPECT_TRUE(radix_compare(w({1, 2}), w({2, 1})) < 0);
  EXPECT_TRUE(radix_compare(w({2, 1}), w({2, 1})) == 0);
  // Letters: cardinality first, then mask.
  EXPECT_TRUE(compare_letters(2, 3) < 0);
  EXPECT_TRUE(compare_letters(4, 3) < 0);
}

TEST(Radix, TotalOrderOnRandomTriples) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word a = random_word(rng, static_cast<int>(rng() % 4), 3);
    const Word b = random_word(rng, static_cast<int>(rng() % 4), 3);
    const Word c = random_word(rng, static_cast<int>(rng() % 4), 3);
    const auto ab = radix_compare(a, b);
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_EQ(radix_compare(b, a), 0 <=> ab);
    if (ab < 0 && radix_compare(b, c) < 0) ASSERT_TRUE(radix_compare(a, c) < 0);
  }
}

TEST(Shuffle, Examples) {
  EXPECT_EQ(shuffle(w({5}), Subset::of({0}), Word()), w({5}));
  const Word u = w({2, 1});
  const Word v = w({2});
  EXPECT_EQ(shuffle(u, Subset::of({0, 1}), v), w({2, 1, 2}));
  EXPECT_EQ(shuffle(u, Subset::of({0, 2}), v), w({2, 2, 1}));
  EXPECT_EQ(shuffle(u, Subset::of({1, 2}), v), w({2, 2, 1}));
  EXPECT_EQ(max_shuffle(u, v), w({2, 2, 1}));
  EXPECT_THROW(shuffle(u, Subset::of({0}), v), Error);
}

TEST(Shuffle, MaxShuffleDominatesEveryShuffle) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = static_cast<int>(rng() % 5);
    const int q = static_cast<int>(rng() % (9 - p));
    const Word u = random_word(rng, p, 3);
    const Word v = random_word(rng, q, 3);
    ASSERT_EQ(max_shuffle(u, v), brute_max_shuffle(u, v));
  }
}

TEST(Shuffle, StrictlyIncreasingExhaustive) {
  const MonotonicityReport r = shuffle_monotonicity_check(6, 2);
  EXPECT_GT(r.comparisons, 0U);
  EXPECT_TRUE(r.holds());
}

TEST(Shuffle, StrictlyIncreasingRandom) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 4);
    const int q = static_cast<int>(rng() % 4);
    Word u = random_word(rng, p, 3);
    Word u2 = random_word(rng, p, 3);
    const Word v = random_word(rng, q, 3);
    if (u == u2) continue;
    if (lex_compare(u, u2) > 0) std::swap(u, u2);
    std::uint64_t x = 0;
    while (std::popcount(x) != p) x = rng() & ((std::uint64_t{1} << (p + q)) - 1);
    ASSERT_TRUE(lex_compare(shuffle(u, Subset(x), v), shuffle(u2, Subset(x), v)) < 0);
  }
}

TEST(Lead, Examples) {
  const LayeredGround ground(1, 2, 3);
  EXPECT_FALSE(lead(SetFunction(ground.size(), 2), ground).has_value());

  SetFunction single(ground.size(), 2);
  const Subset q = Subset::of({ground.vc_index(0, 0), ground.vc_index(1, 2)});
  single.set(q, 1);
  EXPECT_EQ(lead(single, ground), code(q, ground));

  // Same F-part, one word longer: the longer one wins.
  SetFunction two(ground.size(), 2);
  const Subset column = Subset::of({ground.vc_index(0, 1), ground.vc_index(1, 1)});
  two.set(column, 1);
  two.set(q, 1);
  EXPECT_EQ(lead(two, ground)->word.size(), 2U);

  // Larger F-parts are smaller, so the set avoiding F leads.
  SetFunction with_f(ground.size(), 2);
  const Subset uses_f = Subset::of({0, ground.vc_index(0, 0)});
  with_f.set(uses_f, 1);
  with_f.set(q, 1);
  EXPECT_EQ(lead(with_f, ground), code(q, ground));
  EXPECT_TRUE(code(uses_f, ground) < code(q, ground));
}

TEST(Invariance, PositionBlindStructuresAreInvariant) {
  for (int fs = 0; fs <= 2; ++fs) {
    for (int vs = 1; vs <= 2; ++vs) {
      for (int cs = 2; cs <= 4; ++cs) {
        const LayeredGround ground(fs, vs, cs);
        const InvStructure h = blind(ground, 1, 1, static_cast<std::uint64_t>(fs * 100 + vs * 10 + cs));
        for (int r = 0; r <= cs; ++r) ASSERT_TRUE(check_invariance(h, r));
        ASSERT_TRUE(is_fl_invariant(h));
        ASSERT_TRUE(is_code_invariant(h.f, ground));
      }
    }
  }
}

TEST(Invariance, DistinguishedPositionBreaksIt) {
  const LayeredGround ground(0, 1, 3);
  SetFunction f(ground.size(), 1);
  f.set(Subset::of({ground.vc_index(0, 0)}), 1);
  const InvStructure h{ground, f, unit(ground.size())};
  EXPECT_FALSE(check_invariance(h, 1));
  EXPECT_FALSE(is_code_invariant(f, ground));
}

TEST(Invariance, Hereditary) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    const LayeredGround ground(static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2), 3 + static_cast<int>(rng() % 2));
    SetFunction f = position_blind_function(ground, 1, rng());
    // Perturb one value half of the time.
    if (trial % 2 == 1) {
      const auto sets = ksubsets(ground.size(), 1);
      f.set(sets[rng() % sets.size()], 99);
    }
    const InvStructure h{ground, f, position_blind_function(ground, 2, rng())};
    for (int r = 1; r < ground.c_size(); ++r) {
      if (!check_invariance(h, r)) continue;
      for (int r2 = 0; r2 <= r; ++r2) ASSERT_TRUE(check_invariance(h, r2));
    }
  }
}

TEST(LeadingProduct, EquationsOnCorpus) {
  std::size_t checked = 0;
  for (int fs = 0; fs <= 2; ++fs) {
    for (int vs = 1; vs <= 2; ++vs) {
      for (int cs = 2; cs <= 4; ++cs) {
        for (int m = 1; m <= 2; ++m) {
          for (int n = 1; m + n <= cs; ++n) {
            const LayeredGround ground(fs, vs, cs);
            const InvStructure h = blind(ground, m, n, static_cast<std::uint64_t>(checked + 5));
            const LeadingProductReport r = leading_product_check(h.f, h.g, h);
            ASSERT_TRUE(r.all_hold()) << fs << vs << cs << m << n;
            ASSERT_EQ(r.product_at_q0, Rational(static_cast<long>(r.multiplicity)) * h.f.at(r.a0) * h.g.at(r.b0));
            ASSERT_EQ(lead(product(h.f, h.g), ground), r.lead_pair);
            ASSERT_EQ(r.lead_product.word, max_shuffle(code(r.a0, ground).word, code(r.b0 - ground.f_part(), ground).word));
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 20U);
}

TEST(LeadingProduct, HypothesisErrors) {
  const LayeredGround ground(1, 1, 3);
  const InvStructure h = blind(ground, 1, 1, 3);
  try {
    leading_product_check(SetFunction(ground.size(), 1), h.g, h);
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.which, Hypothesis::zero_factor);
  }
  // supp(f) only meets F.
  SetFunction only_f(ground.size(), 1);
  only_f.set(Subset::of({0}), 1);
  try {
    leading_product_check(only_f, h.g, InvStructure{ground, only_f, h.g});
    FAIL();
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.which, Hypothesis::no_support_off_f);
  }
  const LayeredGround short_chain(0, 1, 1);
  const InvStructure s = blind(short_chain, 1, 1, 4);
  EXPECT_THROW(leading_product_check(s.f, s.g, s), HypothesisError);
}

TEST(ShuffleProduct, Examples) {
  const WordFunction u{{w({1, 2}), 1}};
  EXPECT_EQ(shuffle_product(u, WordFunction{{Word(), 1}}), u);
  const WordFunction a{{w({1}), 1}};
  EXPECT_EQ(shuffle_product(a, a), (WordFunction{{w({1, 1}), 2}}));
}

TEST(ShuffleProduct, NonzeroWithLeadingMaxShuffle) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const WordFunction f = random_word_function(5, 3, 1 + rng() % 4, rng());
    const WordFunction g = random_word_function(5, 3, 1 + rng() % 4, rng());
    const WordFunction fg = shuffle_product(f, g);
    ASSERT_FALSE(fg.empty());
    ASSERT_EQ(lead(fg), max_shuffle(*lead(f), *lead(g)));
  }
}

TEST(FinalSegment, Examples) {
  const WordPredicate short_words = [](const Word& x) { return x.size() <= 2; };
  const WordFunction long_f{{w({1, 1, 2}), 1}, {w({2, 2, 2}), -1}};
  const WordFunction g{{w({1}), 3}, {Word(), 1}};
  EXPECT_TRUE(final_segment_ideal_check(short_words, long_f, g));

  const WordPredicate no_b = [](const Word& x) {
    return std::none_of(x.letters().begin(), x.letters().end(), [](Letter a) { return a == 2; });
  };
  const WordFunction with_b{{w({2}), 1}, {w({1, 2}), 1}};
  EXPECT_TRUE(final_segment_ideal_check(no_b, with_b, g));

  const WordPredicate not_closed = [](const Word& x) { return x.size() == 2; };
  EXPECT_THROW(final_segment_ideal_check(not_closed, WordFunction{{w({1, 1}), 1}}, g), Error);
}

TEST(FinalSegment, RandomClosedPredicates) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    // Words avoiding a random set of letters and no longer than a bound:
    // closed under subwords.
    const Letter banned = 1 + static_cast<Letter>(rng() % 3);
    const std::size_t max_len = 1 + rng() % 4;
    const WordPredicate down = [=](const Word& x) {
      return x.size() <= max_len &&
             std::none_of(x.letters().begin(), x.letters().end(), [&](Letter a) { return a == banned; });
    };
    const WordFunction f = random_word_function(4, 3, 1 + rng() % 3, rng());
    const WordFunction g = random_word_function(3, 3, 1 + rng() % 3, rng());
    ASSERT_TRUE(final_segment_ideal_check(down, f, g));
  }
}
