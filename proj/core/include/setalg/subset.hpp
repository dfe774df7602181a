#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace setalg {

// Ground sets are the index ranges {0, ..., l-1} with l <= kMaxGround.
inline constexpr int kMaxGround = 64;

// A finite subset of a ground set, stored as a single 64-bit word. The ground
// size lives with the containing object (SetFunction, SetFamily, ...).
//
// For subsets of equal cardinality the natural order on the bit word is the
// colexicographic order used everywhere in the library.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> members);
  static Subset from_members(std::span<const int> members);
  static constexpr Subset full(int ground) {
    return Subset(ground >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  // Largest member plus one; 0 for the empty set.
  constexpr int span_size() const { return 64 - std::countl_zero(bits_); }

  constexpr Subset with(int x) const { return Subset(bits_ | (std::uint64_t{1} << x)); }
  constexpr Subset without(int x) const { return Subset(bits_ & ~(std::uint64_t{1} << x)); }

  std::vector<int> members() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Binomial coefficient C(n, k) for 0 <= n <= 64; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

// All k-subsets of {0..ground-1} in colex order. Empty when k > ground.
std::vector<Subset> ksubsets(int ground, int k);

// Position of s within ksubsets(l, |s|) for any l covering s.
std::size_t colex_rank(Subset s);

// Inverse of colex_rank for a fixed cardinality.
Subset colex_unrank(std::size_t rank, int k);

// Calls visit(P) for every m-subset P of q, in colex order. Faster than
// materializing splits().
template <class Visitor>
void for_each_subset_of(Subset q, int m, Visitor&& visit);

// All pairs (P, Q \ P) with P an m-subset of Q; P runs over [Q]^m in colex
// order. Empty when m > |Q|.
std::vector<std::pair<Subset, Subset>> splits(Subset q, int m);

// Deposits the low bits of `pattern` onto the members of `q` (pdep).
Subset deposit(std::uint64_t pattern, Subset q);

// A family of distinct subsets of a common ground set.
class SetFamily {
 public:
  explicit SetFamily(int ground_size = 0);
  SetFamily(int ground_size, std::span<const Subset> sets);

  int ground_size() const { return ground_size_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  // Adds s unless already present. Returns true when inserted.
  bool add(Subset s);
  bool contains(Subset s) const;

  // Union of two families over the same ground (first-seen order preserved).
  SetFamily united(const SetFamily& other) const;

 private:
  int ground_size_;
  std::vector<Subset> sets_;
  std::unordered_set<std::uint64_t> index_;
};

template <class Visitor>
void for_each_subset_of(Subset q, int m, Visitor&& visit) {
  const int size = q.size();
  if (m < 0 || m > size) return;
  if (m == 0 || m == size) {
    visit(m == 0 ? Subset{} : q);
    return;
  }
  // Gosper's hack over patterns of m bits among |q| positions yields colex
  // order; depositing onto q preserves it.
  std::uint64_t pattern = (std::uint64_t{1} << m) - 1;
  const std::uint64_t limit = size >= 64 ? 0 : (std::uint64_t{1} << size);
  while (true) {
    visit(deposit(pattern, q));
    const std::uint64_t low = pattern & (~pattern + 1);
    const std::uint64_t ripple = pattern + low;
    if (ripple == 0) return;  // pattern occupied the top bits of a 64-bit word
    pattern = (((ripple ^ pattern) >> 2) / low) | ripple;
    if (limit != 0 && pattern >= limit) return;
  }
}

}  // namespace setalg
