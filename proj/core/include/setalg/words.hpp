#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "setalg/errors.hpp"
#include "setalg/rational.hpp"
#include "setalg/set_function.hpp"
#include "setalg/subset.hpp"

namespace setalg {

// A letter is a nonempty subset of V, stored as a bit mask. Letters are
// ordered by cardinality, then by mask.
using Letter = std::uint32_t;

std::strong_ordering compare_letters(Letter a, Letter b);

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Lexicographic order (a proper prefix is smaller).
std::strong_ordering lex_compare(const Word& u, const Word& v);
// Shorter words first, then lexicographic.
std::strong_ordering radix_compare(const Word& u, const Word& v);

struct RadixLess {
  bool operator()(const Word& u, const Word& v) const { return radix_compare(u, v) < 0; }
};

// The word w of length |u|+|v| carrying u on `positions` and v elsewhere.
// Throws unless |positions| == |u| and positions fit in the result.
Word shuffle(const Word& u, Subset positions, const Word& v);

// Lexicographically largest shuffle of u and v.
Word max_shuffle(const Word& u, const Word& v);

// Distinct scattered subwords of w (including the empty word and w).
std::vector<Word> subwords(const Word& w);

// Ground set F + V x C flattened as: F first, then (v, c) at
// |F| + c*|V| + v (chain-major, V-minor).
class LayeredGround {
 public:
  LayeredGround(int f_size, int v_size, int c_size);

  int f_size() const { return f_size_; }
  int v_size() const { return v_size_; }
  int c_size() const { return c_size_; }
  int size() const { return f_size_ + v_size_ * c_size_; }

  int vc_index(int v, int c) const { return f_size_ + c * v_size_ + v; }
  Subset f_part() const { return Subset::full(f_size_); }
  // F together with V x X for a set X of chain positions.
  Subset domain(Subset chain_positions) const;

  friend bool operator==(const LayeredGround&, const LayeredGround&) = default;

 private:
  int f_size_;
  int v_size_;
  int c_size_;
};

// (Q intersect F, word of Q \ F read along the chain). F-parts are ordered by
// decreasing cardinality, then by mask; ties are broken by radix order on words.
struct CodedSet {
  Subset f_part;
  Word word;

  friend bool operator==(const CodedSet&, const CodedSet&) = default;
  friend std::strong_ordering operator<=>(const CodedSet& a, const CodedSet& b);
};

CodedSet code(Subset q, const LayeredGround& ground);

// Largest code over the support; nullopt stands for -infinity (f = 0).
std::optional<CodedSet> lead(const SetFunction& f, const LayeredGround& ground);

// The pair (E, (sign of f, sign of g)) viewed as a structure on a layered ground.
struct InvStructure {
  LayeredGround ground;
  SetFunction f;
  SetFunction g;
};

// Every two r-subsets X, X' of the chain are equivalent: the map fixing F
// and sending (v, x_i) to (v, x'_i) preserves the sign colorings of both
// functions on F + V x X.
bool check_invariance(const InvStructure& h, int r);

// check_invariance for every r <= |C|.
bool is_fl_invariant(const InvStructure& h);

// f takes equal values on subsets with equal codes.
bool is_code_invariant(const SetFunction& f, const LayeredGround& ground);

// A function of the given degree whose value at Q depends only on code(Q):
// each code gets 0 with probability zero_probability, otherwise a random
// nonzero rational. At least one F-free code is nonzero when any exists.
SetFunction position_blind_function(const LayeredGround& ground, int degree, std::uint64_t seed,
                                    double zero_probability = 0.5);

enum class Hypothesis {
  zero_factor,
  structure_not_invariant,
  f_not_invariant,
  g_not_invariant,
  chain_too_short,
  no_support_off_f,
};

std::string to_string(Hypothesis h);

class HypothesisError : public Error {
 public:
  explicit HypothesisError(Hypothesis which);
  Hypothesis which;
};

struct LeadingProductReport {
  std::size_t disjoint_pairs = 0;  // |supp(f,g)|
  std::size_t leading_sets = 0;    // sets Q0 whose code is lead(f,g); all are checked
  Subset q0, a0, b0;
  CodedSet lead_f, lead_g, lead_pair, lead_product;
  Word expected_word;              // w(A0) max-shuffled with w(B0 \ F)
  std::size_t multiplicity = 0;    // |supp(f,g)(Q0)|
  Rational product_at_q0;

  bool pairs_nonempty = false;        // supp(f,g) is nonempty
  bool pair_codes_leading = false;    // every pair at Q0 has codes (lead f, lead g)
  bool pair_values_constant = false;  // every pair at Q0 has values (f(A0), g(B0))
  bool multiplicity_formula = false;  // fg(Q0) = |supp(f,g)(Q0)| f(A0) g(B0)
  bool lead_formula = false;          // lead(fg) = lead(f,g) = (Q0 & F, max shuffle)
  bool product_nonzero = false;

  bool all_hold() const {
    return pairs_nonempty && pair_codes_leading && pair_values_constant && multiplicity_formula &&
           lead_formula && product_nonzero;
  }
};

// Verifies the leading-term equations for fg on an invariant structure.
// Throws HypothesisError naming the first failed hypothesis.
LeadingProductReport leading_product_check(const SetFunction& f, const SetFunction& g,
                                           const InvStructure& h);

// Finitely supported functions on words, multiplied by shuffling.
using WordFunction = std::map<Word, Rational, RadixLess>;

WordFunction shuffle_product(const WordFunction& f, const WordFunction& g);
std::optional<Word> lead(const WordFunction& f);

// Nonzero function with up to `terms` words of length 1..max_length over the
// letters 1..alphabet_size and small nonzero integer values.
WordFunction random_word_function(int max_length, int alphabet_size, std::size_t terms,
                                  std::uint64_t seed);

// Exhaustive check that, for fixed lengths p, q and positions X, the map
// (u, v) -> shuffle(u, X, v) strictly increases along the componentwise
// lexicographic order on pairs. Covers p + q <= max_total over the letters
// 1..alphabet_size.
struct MonotonicityReport {
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  bool holds() const { return violations == 0; }
};

MonotonicityReport shuffle_monotonicity_check(int max_total, int alphabet_size);

using WordPredicate = std::function<bool(const Word&)>;

// If supp(f) avoids the subword-closed set described by `down_closed`, so
// does supp(fg). Throws when the predicate is not subword-closed on the
// supports involved.
bool final_segment_ideal_check(const WordPredicate& down_closed, const WordFunction& f,
                               const WordFunction& g);

}  // namespace setalg
