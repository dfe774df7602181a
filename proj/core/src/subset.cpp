#include "setalg/subset.hpp"

#include <array>

#include "setalg/errors.hpp"

namespace setalg {
namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>;

constexpr BinomialTable make_binomials() {
  BinomialTable table{};
  for (int n = 0; n <= kMaxGround; ++n) {
    table[n][0] = 1;
    for (int k = 1; k <= n; ++k) table[n][k] = table[n - 1][k - 1] + (k < n ? table[n - 1][k] : 0);
  }
  return table;
}

constexpr BinomialTable kBinomials = make_binomials();

}  // namespace

Subset Subset::of(std::initializer_list<int> members) {
  return from_members(std::span<const int>(members.begin(), members.size()));
}

Subset Subset::from_members(std::span<const int> members) {
  std::uint64_t bits = 0;
  for (int x : members) {
    if (x < 0 || x >= kMaxGround) throw Error("element outside the 64-element ground cap");
    bits |= std::uint64_t{1} << x;
  }
  return Subset(bits);
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxGround || k < 0 || k > n) return 0;
  return kBinomials[n][k];
}

Subset deposit(std::uint64_t pattern, Subset q) {
  std::uint64_t out = 0;
  for (std::uint64_t b = q.bits(); b != 0 && pattern != 0; b &= b - 1, pattern >>= 1) {
    if (pattern & 1U) out |= b & (~b + 1);
  }
  return Subset(out);
}

std::vector<Subset> ksubsets(int ground, int k) {
  if (ground < 0 || ground > kMaxGround) throw Error("ground size exceeds the 64-element cap");
  std::vector<Subset> out;
  if (k < 0 || k > ground) return out;
  out.reserve(binomial(ground, k));
  for_each_subset_of(Subset::full(ground), k, [&](Subset s) { out.push_back(s); });
  return out;
}

std::size_t colex_rank(Subset s) {
  std::size_t rank = 0;
  int i = 1;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1, ++i) {
    rank += binomial(std::countr_zero(b), i);
  }
  return rank;
}

Subset colex_unrank(std::size_t rank, int k) {
  std::uint64_t bits = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    bits |= std::uint64_t{1} << c;
  }
  return Subset(bits);
}

std::vector<std::pair<Subset, Subset>> splits(Subset q, int m) {
  std::vector<std::pair<Subset, Subset>> out;
  for_each_subset_of(q, m, [&](Subset p) { out.emplace_back(p, q - p); });
  return out;
}

SetFamily::SetFamily(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0 || ground_size > kMaxGround) {
    throw Error("ground size exceeds the 64-element cap");
  }
}

SetFamily::SetFamily(int ground_size, std::span<const Subset> sets) : SetFamily(ground_size) {
  for (Subset s : sets) add(s);
}

bool SetFamily::add(Subset s) {
  if (!s.subset_of(Subset::full(ground_size_))) throw Error("subset outside the ground set");
  if (!index_.insert(s.bits()).second) return false;
  sets_.push_back(s);
  return true;
}

bool SetFamily::contains(Subset s) const {
  return index_.contains(s.bits());
}

SetFamily SetFamily::united(const SetFamily& other) const {
  if (other.ground_size_ != ground_size_) throw Error("ground-set mismatch");
  SetFamily out = *this;
  for (Subset s : other.sets_) out.add(s);
  return out;
}

}  // namespace setalg
