#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "setalg/errors.hpp"
#include "setalg/set_function.hpp"
#include "setalg/subset.hpp"

namespace setalg {

using Tuple = std::vector<int>;

// A finite relational structure on {0..base_size-1}: one tuple set per
// relation symbol, each symbol with a fixed arity.
class RelStructure {
 public:
  RelStructure(int base_size, std::vector<int> signature);

  // Undirected simple graph as a single symmetric binary relation.
  static RelStructure graph(int vertices, std::span<const std::pair<int, int>> edges);

  int base_size() const { return base_size_; }
  const std::vector<int>& signature() const { return signature_; }
  // Tuples of each relation, sorted and distinct.
  const std::vector<std::vector<Tuple>>& relations() const { return relations_; }

  void add_tuple(std::size_t relation, Tuple tuple);
  bool has_tuple(std::size_t relation, const Tuple& tuple) const;

  friend bool operator==(const RelStructure&, const RelStructure&) = default;

 private:
  int base_size_;
  std::vector<int> signature_;
  std::vector<std::vector<Tuple>> relations_;
};

// Isomorphism type: the least tuple encoding over all relabelings of the
// base. Equal types <=> isomorphic structures.
struct IsoType {
  int base_size = 0;
  std::vector<int> signature;
  std::vector<std::uint64_t> code;

  friend bool operator==(const IsoType&, const IsoType&) = default;
  friend auto operator<=>(const IsoType&, const IsoType&) = default;
};

// Maximum base size accepted by canonical_form and is_isomorphic.
inline constexpr int kMaxCanonicalBase = 8;

// Induced substructure on a, re-indexed 0..|a|-1 in increasing order.
RelStructure restriction(const RelStructure& r, Subset a);

// Relabels element x as perm[x].
RelStructure relabel(const RelStructure& r, std::span<const int> perm);

IsoType canonical_form(const RelStructure& r);
bool is_isomorphic(const RelStructure& a, const RelStructure& b);

// Number of isomorphism types among restrictions to n-subsets.
std::size_t profile(const RelStructure& r, int n);
std::vector<std::size_t> profile_sequence(const RelStructure& r);

// Distinct types of n-element restrictions, sorted.
std::vector<IsoType> realized_types(const RelStructure& r, int n);

struct Indicator {
  SetFunction function;
  bool realized;  // false when no n-subset has the requested type
};

Indicator invariant_indicator(const RelStructure& r, const IsoType& type, int n);

// Indicators of realized_types(r, n), in that order. They form a basis of the
// r-invariant functions of degree n.
std::vector<SetFunction> invariant_basis(const RelStructure& r, int n);

// True when f takes equal values on subsets with isomorphic restrictions.
bool is_invariant(const SetFunction& f, const RelStructure& r);

struct ProfileReport {
  std::vector<std::size_t> profile;  // phi(0..l)
  std::size_t growth_checks = 0;     // phi(n) <= (n+1) phi(n+1), n < l
  std::size_t monotone_checks = 0;   // phi(n) <= phi(n+m), 2n+m <= l
};

// Raised when a profile inequality fails; that would be a defect here, not a
// counterexample.
class ProfileInequalityError : public Error {
 public:
  ProfileInequalityError(int n, int m, std::size_t lhs, std::size_t rhs);
  int n, m;
  std::size_t lhs, rhs;
};

ProfileReport check_profile_inequalities(const RelStructure& r);

// Every F with |F| <= k has a disjoint F' with an isomorphic restriction.
bool disjoint_embedding_check(const RelStructure& r, int k);

// Indicator f of the type of r restricted to f_set, after checking that no two
// disjoint sets carry that type; f*f = 0 is verified before returning.
SetFunction kernel_zero_divisor(const RelStructure& r, Subset f_set);

// h(n) + h(m) - 1 <= h(n + m) for all n + m <= max_n.
bool hilbert_inequality_check(std::span<const std::uint64_t> h, int max_n);

}  // namespace setalg
