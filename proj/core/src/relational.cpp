#include "setalg/relational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "setalg/errors.hpp"

namespace setalg {

RelStructure::RelStructure(int base_size, std::vector<int> signature)
    : base_size_(base_size), signature_(std::move(signature)), relations_(signature_.size()) {
  if (base_size < 0 || base_size > kMaxGround) throw Error("base size exceeds the 64-element cap");
  for (int arity : signature_) {
    if (arity < 0) throw Error("negative arity");
  }
}

RelStructure RelStructure::graph(int vertices, std::span<const std::pair<int, int>> edges) {
  RelStructure g(vertices, {2});
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error("graph edges must join distinct vertices");
    g.add_tuple(0, {a, b});
    g.add_tuple(0, {b, a});
  }
  return g;
}

void RelStructure::add_tuple(std::size_t relation, Tuple tuple) {
  if (relation >= relations_.size()) throw Error("unknown relation symbol");
  if (static_cast<int>(tuple.size()) != signature_[relation]) {
    throw Error("tuple length does not match arity");
  }
  for (int x : tuple) {
    if (x < 0 || x >= base_size_) throw Error("tuple leaves the base");
  }
  auto& tuples = relations_[relation];
  const auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
  if (it == tuples.end() || *it != tuple) tuples.insert(it, std::move(tuple));
}

bool RelStructure::has_tuple(std::size_t relation, const Tuple& tuple) const {
  const auto& tuples = relations_.at(relation);
  return std::binary_search(tuples.begin(), tuples.end(), tuple);
}

RelStructure restriction(const RelStructure& r, Subset a) {
  if (!a.subset_of(Subset::full(r.base_size()))) throw Error("restriction set leaves the base");
  std::vector<int> index(static_cast<std::size_t>(r.base_size()), -1);
  int next = 0;
  for (int x : a.members()) index[static_cast<std::size_t>(x)] = next++;
  RelStructure out(next, r.signature());
  for (std::size_t i = 0; i < r.relations().size(); ++i) {
    for (const Tuple& t : r.relations()[i]) {
      Tuple mapped;
      mapped.reserve(t.size());
      bool inside = true;
      for (int x : t) {
        if (index[static_cast<std::size_t>(x)] < 0) {
          inside = false;
          break;
        }
        mapped.push_back(index[static_cast<std::size_t>(x)]);
      }
      if (inside) out.add_tuple(i, std::move(mapped));
    }
  }
  return out;
}

RelStructure relabel(const RelStructure& r, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != r.base_size()) throw Error("permutation size mismatch");
  RelStructure out(r.base_size(), r.signature());
  for (std::size_t i = 0; i < r.relations().size(); ++i) {
    for (const Tuple& t : r.relations()[i]) {
      Tuple mapped;
      for (int x : t) mapped.push_back(perm[static_cast<std::size_t>(x)]);
      out.add_tuple(i, std::move(mapped));
    }
  }
  return out;
}

namespace {

// Tuples flattened per relation, ready to be re-encoded under permutations.
struct FlatStructure {
  int base;
  std::vector<int> arity;
  std::vector<std::vector<int>> coords;  // concatenated tuples per relation
};

FlatStructure flatten(const RelStructure& r) {
  FlatStructure flat{r.base_size(), r.signature(), {}};
  for (const auto& tuples : r.relations()) {
    std::vector<int> c;
    for (const Tuple& t : tuples) c.insert(c.end(), t.begin(), t.end());
    flat.coords.push_back(std::move(c));
  }
  return flat;
}

// Layout: for each relation, its tuple count followed by the sorted indices
// of the relabeled tuples (a tuple's index is its base-l numeral).
void encode(const FlatStructure& flat, std::span<const int> perm, std::vector<std::uint64_t>& out) {
  out.clear();
  const auto base = static_cast<std::uint64_t>(flat.base);
  for (std::size_t i = 0; i < flat.coords.size(); ++i) {
    const auto arity = static_cast<std::size_t>(flat.arity[i]);
    const std::vector<int>& c = flat.coords[i];
    const std::size_t count = arity == 0 ? (c.empty() ? 0 : 1) : c.size() / arity;
    out.push_back(count);
    const std::size_t start = out.size();
    for (std::size_t t = 0; t < count; ++t) {
      std::uint64_t index = 0;
      for (std::size_t j = 0; j < arity; ++j) {
        index = index * base + static_cast<std::uint64_t>(perm[static_cast<std::size_t>(c[t * arity + j])]);
      }
      out.push_back(index);
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  }
}

}  // namespace

IsoType canonical_form(const RelStructure& r) {
  if (r.base_size() > kMaxCanonicalBase) {
    throw Error("base too large for exhaustive canonicalization");
  }
  // Arity-0 relations hold at most the empty tuple; flatten cannot see it, so
  // record their state separately.
  FlatStructure flat = flatten(r);
  std::vector<std::uint64_t> nullary;
  for (std::size_t i = 0; i < r.relations().size(); ++i) {
    if (r.signature()[i] == 0) nullary.push_back(r.relations()[i].empty() ? 0 : 1);
  }

  std::vector<int> perm(static_cast<std::size_t>(r.base_size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> current;
  encode(flat, perm, best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    encode(flat, perm, current);
    if (current < best) std::swap(best, current);
  }
  best.insert(best.end(), nullary.begin(), nullary.end());
  return IsoType{r.base_size(), r.signature(), std::move(best)};
}

bool is_isomorphic(const RelStructure& a, const RelStructure& b) {
  if (a.base_size() != b.base_size() || a.signature() != b.signature()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Isomorphism type of every n-subset, in colex order.
std::vector<std::pair<Subset, IsoType>> typed_subsets(const RelStructure& r, int n) {
  std::vector<std::pair<Subset, IsoType>> out;
  for (Subset s : ksubsets(r.base_size(), n)) out.emplace_back(s, canonical_form(restriction(r, s)));
  return out;
}

}  // namespace

std::vector<IsoType> realized_types(const RelStructure& r, int n) {
  std::set<IsoType> types;
  for (auto& [s, t] : typed_subsets(r, n)) types.insert(std::move(t));
  return {types.begin(), types.end()};
}

std::size_t profile(const RelStructure& r, int n) {
  if (n < 0 || n > r.base_size()) throw Error("profile degree outside 0..l");
  return realized_types(r, n).size();
}

std::vector<std::size_t> profile_sequence(const RelStructure& r) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= r.base_size(); ++n) out.push_back(profile(r, n));
  return out;
}

Indicator invariant_indicator(const RelStructure& r, const IsoType& type, int n) {
  Indicator out{SetFunction(r.base_size(), n), false};
  for (const auto& [s, t] : typed_subsets(r, n)) {
    if (t == type) {
      out.function.set(s, 1);
      out.realized = true;
    }
  }
  return out;
}

std::vector<SetFunction> invariant_basis(const RelStructure& r, int n) {
  const auto typed = typed_subsets(r, n);
  std::map<IsoType, SetFunction> by_type;
  for (const auto& [s, t] : typed) {
    auto it = by_type.try_emplace(t, r.base_size(), n).first;
    it->second.set(s, 1);
  }
  std::vector<SetFunction> basis;
  for (auto& [t, f] : by_type) basis.push_back(std::move(f));
  return basis;
}

bool is_invariant(const SetFunction& f, const RelStructure& r) {
  if (f.ground_size() != r.base_size()) throw Error("ground-set mismatch");
  std::map<IsoType, Rational> value_of;
  for (const auto& [s, t] : typed_subsets(r, f.degree())) {
    const auto [it, inserted] = value_of.try_emplace(t, f.at(s));
    if (!inserted && it->second != f.at(s)) return false;
  }
  return true;
}

ProfileInequalityError::ProfileInequalityError(int n_, int m_, std::size_t lhs_, std::size_t rhs_)
    : Error("profile inequality violated at n=" + std::to_string(n_) + ", m=" + std::to_string(m_) +
            ": " + std::to_string(lhs_) + " > " + std::to_string(rhs_)),
      n(n_),
      m(m_),
      lhs(lhs_),
      rhs(rhs_) {}

ProfileReport check_profile_inequalities(const RelStructure& r) {
  ProfileReport report;
  report.profile = profile_sequence(r);
  const int l = r.base_size();
  const auto& phi = report.profile;
  for (int n = 0; n < l; ++n) {
    const std::size_t rhs = static_cast<std::size_t>(n + 1) * phi[static_cast<std::size_t>(n + 1)];
    if (phi[static_cast<std::size_t>(n)] > rhs) {
      throw ProfileInequalityError(n, 1, phi[static_cast<std::size_t>(n)], rhs);
    }
    ++report.growth_checks;
  }
  for (int n = 0; 2 * n <= l; ++n) {
    for (int m = 0; 2 * n + m <= l; ++m) {
      const std::size_t lhs = phi[static_cast<std::size_t>(n)];
      const std::size_t rhs = phi[static_cast<std::size_t>(n + m)];
      if (lhs > rhs) throw ProfileInequalityError(n, m, lhs, rhs);
      ++report.monotone_checks;
    }
  }
  return report;
}

bool disjoint_embedding_check(const RelStructure& r, int k) {
  if (k < 0 || 2 * k > r.base_size()) throw Error("disjoint embedding check needs 2k <= l");
  for (int size = 0; size <= k; ++size) {
    std::map<IsoType, std::vector<Subset>> by_type;
    for (auto& [s, t] : typed_subsets(r, size)) by_type[std::move(t)].push_back(s);
    for (const auto& [t, sets] : by_type) {
      for (Subset f : sets) {
        const bool has_copy =
            std::any_of(sets.begin(), sets.end(), [f](Subset g) { return !g.intersects(f); });
        if (!has_copy) return false;
      }
    }
  }
  return true;
}

SetFunction kernel_zero_divisor(const RelStructure& r, Subset f_set) {
  const int n = f_set.size();
  const IsoType type = canonical_form(restriction(r, f_set));
  std::vector<Subset> occurrences;
  for (const auto& [s, t] : typed_subsets(r, n)) {
    if (t == type) occurrences.push_back(s);
  }
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    for (std::size_t j = i + 1; j < occurrences.size(); ++j) {
      if (!occurrences[i].intersects(occurrences[j])) {
        throw Error("type admits disjoint embedding; f² ≠ 0 not guaranteed");
      }
    }
  }
  SetFunction f(r.base_size(), n);
  for (Subset s : occurrences) f.set(s, 1);
  if (!product(f, f).is_zero()) throw std::logic_error("kernel indicator squared is nonzero");
  return f;
}

bool hilbert_inequality_check(std::span<const std::uint64_t> h, int max_n) {
  if (max_n < 0 || h.size() <= static_cast<std::size_t>(max_n)) {
    throw Error("Hilbert function not defined up to the requested degree");
  }
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; n + m <= max_n; ++m) {
      // h(n) + h(m) - 1 <= h(n+m), kept in unsigned arithmetic.
      if (h[static_cast<std::size_t>(n)] + h[static_cast<std::size_t>(m)] >
          h[static_cast<std::size_t>(n + m)] + 1) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace setalg
