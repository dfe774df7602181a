#include "setalg/incidence.hpp"

#include "setalg/errors.hpp"

namespace setalg {
namespace {

void require_degree_one(const SetFunction& f) {
  if (f.degree() != 1) throw Error("derivations need a degree-1 function");
}

}  // namespace

RationalMatrix inclusion_matrix(int l, int n, int m) {
  if (n < 0 || m < 0) throw Error("negative degree");
  if (n + m > l) throw Error("degree exceeds ground set");
  auto rows = ksubsets(l, n);
  auto cols = ksubsets(l, n + m);
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for_each_subset_of(cols[c], n, [&](Subset p) { out(colex_rank(p), c) = 1; });
  }
  out.set_labels(std::move(rows), std::move(cols));
  return out;
}

bool verify_kantor(int l, int n, int m) {
  return rank(inclusion_matrix(l, n, m)) == binomial(l, n);
}

RationalMatrix derivation_matrix(const SetFunction& f, int n) {
  require_degree_one(f);
  const int l = f.ground_size();
  if (n < 0 || n + 1 > l) throw Error("degree exceeds ground set");
  auto rows = ksubsets(l, n);
  auto cols = ksubsets(l, n + 1);
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int x : cols[c].members()) {
      out(colex_rank(cols[c].without(x)), c) = f.at(Subset::of({x}));
    }
  }
  out.set_labels(std::move(rows), std::move(cols));
  return out;
}

RationalMatrix scaling_matrix(const SetFunction& f, int n) {
  require_degree_one(f);
  const int l = f.ground_size();
  if (n < 0 || n > l) throw Error("degree exceeds ground set");
  auto basis = ksubsets(l, n);
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational weight = 1;
    for (int x : basis[i].members()) weight *= f.at(Subset::of({x}));
    out(i, i) = weight;
  }
  out.set_labels(basis, basis);
  return out;
}

bool check_commutation(const SetFunction& f, int n) {
  const SetFunction e = singleton_sum(f.ground_size());
  return derivation_matrix(e, n) * scaling_matrix(f, n + 1) ==
         scaling_matrix(f, n) * derivation_matrix(f, n);
}

bool derivation_surjective(const SetFunction& f, int n) {
  return rank(derivation_matrix(f, n)) == binomial(f.ground_size(), n);
}

bool weighted_kantor_check(const SetFunction& f, int n) {
  require_degree_one(f);
  return nullspace_basis(mult_matrix(f, n).matrix).empty();
}

RegularityReport e_regular_on_invariants(const RelStructure& r, int n) {
  const int l = r.base_size();
  if (n < 0 || n + 1 > l) throw Error("degree exceeds ground set");
  const SetFunction e = singleton_sum(l);
  const auto basis = invariant_basis(r, n);
  // Columns: e * b for each invariant basis function b.
  const auto rows = binomial(l, n + 1);
  RationalMatrix images(rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const RationalVector v = product(e, basis[j]).to_vector();
    for (std::size_t i = 0; i < v.size(); ++i) images(i, j) = v[i];
  }
  return RegularityReport{rank(images) == basis.size(), 2 * n + 1 <= l, basis.size()};
}

}  // namespace setalg
