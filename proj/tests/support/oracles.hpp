#pragma once

// Slow, independent reference computations used to cross-check the library.
// Nothing here calls into the algorithms under test; only value types
// (Subset, Rational, SetFunction storage) are shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "setalg/rational.hpp"
#include "setalg/relational.hpp"
#include "setalg/set_function.hpp"
#include "setalg/subset.hpp"

namespace oracle {

using setalg::Integer;
using setalg::Rational;
using setalg::SetFunction;
using setalg::Subset;

// C(n, k) by the multiplicative formula.
inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// All masks of the given popcount below 2^ground, increasing.
inline std::vector<std::uint64_t> masks_of_size(int ground, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << ground); ++x) {
    if (std::popcount(x) == k) out.push_back(x);
  }
  return out;
}

// Rank by textbook Gauss-Jordan over the rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

// fg(Q) summed literally over bit masks.
inline std::map<std::uint64_t, Rational> product(const SetFunction& f, const SetFunction& g) {
  std::map<std::uint64_t, Rational> out;
  const int l = f.ground_size();
  const int m = f.degree();
  const int d = m + g.degree();
  if (d > l) return out;
  for (std::uint64_t q : masks_of_size(l, d)) {
    Rational sum = 0;
    // Every submask of q.
    for (std::uint64_t p = q;; p = (p - 1) & q) {
      if (std::popcount(p) == m) sum += f.at(Subset(p)) * g.at(Subset(q & ~p));
      if (p == 0) break;
    }
    if (sum != 0) out[q] = sum;
  }
  return out;
}

inline bool hits_all(std::uint64_t t, const std::vector<Subset>& family) {
  return std::all_of(family.begin(), family.end(), [&](Subset s) { return (s.bits() & t) != 0; });
}

// Minimum transversal size by trying all masks in order of popcount.
inline int tau(int ground, const std::vector<Subset>& family) {
  for (int k = 0; k <= ground; ++k) {
    for (std::uint64_t t : masks_of_size(ground, k)) {
      if (hits_all(t, family)) return k;
    }
  }
  return -1;
}

// Isomorphism by trying every bijection, on raw tuple sets.
inline bool isomorphic(const setalg::RelStructure& a, const setalg::RelStructure& b) {
  if (a.base_size() != b.base_size() || a.signature() != b.signature()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.base_size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t r = 0; r < a.relations().size() && ok; ++r) {
      if (a.relations()[r].size() != b.relations()[r].size()) ok = false;
      for (const auto& t : a.relations()[r]) {
        if (!ok) break;
        setalg::Tuple image;
        for (int x : t) image.push_back(perm[static_cast<std::size_t>(x)]);
        ok = b.has_tuple(r, image);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Induced substructure built directly from tuples.
inline setalg::RelStructure restrict(const setalg::RelStructure& s, const std::vector<int>& members) {
  setalg::RelStructure out(static_cast<int>(members.size()), s.signature());
  for (std::size_t r = 0; r < s.relations().size(); ++r) {
    for (const auto& t : s.relations()[r]) {
      setalg::Tuple image;
      bool inside = true;
      for (int x : t) {
        const auto it = std::find(members.begin(), members.end(), x);
        if (it == members.end()) {
          inside = false;
          break;
        }
        image.push_back(static_cast<int>(it - members.begin()));
      }
      if (inside) out.add_tuple(r, image);
    }
  }
  return out;
}

// Profile by pairwise isomorphism tests between class representatives.
inline std::size_t profile(const setalg::RelStructure& s, int n) {
  std::vector<setalg::RelStructure> reps;
  for (std::uint64_t mask : masks_of_size(s.base_size(), n)) {
    std::vector<int> members;
    for (int x = 0; x < s.base_size(); ++x) {
      if ((mask >> x) & 1U) members.push_back(x);
    }
    const setalg::RelStructure sub = restrict(s, members);
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const auto& r) { return isomorphic(r, sub); });
    if (!seen) reps.push_back(sub);
  }
  return reps.size();
}

inline SetFunction random_function(int ground, int degree, std::mt19937_64& rng, double density = 0.6) {
  SetFunction f(ground, degree);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  for (std::uint64_t q : masks_of_size(ground, degree)) {
    if (keep(rng)) f.set(Subset(q), setalg::make_rational(num(rng), den(rng)));
  }
  return f;
}

}  // namespace oracle
