#pragma once

#include "setalg/matrix.hpp"
#include "setalg/relational.hpp"
#include "setalg/set_function.hpp"

namespace setalg {

// Inclusion matrix between n-subsets (rows) and (n+m)-subsets (columns) of an
// l-set: entry 1 iff row is contained in column.
RationalMatrix inclusion_matrix(int l, int n, int m);

// rank(inclusion_matrix(l, n, m)) == C(l, n). Guaranteed when 2n + m <= l.
bool verify_kantor(int l, int n, int m);

// The derivation induced by a degree-1 f, restricted to square-free monomials
// of degree n+1 -> degree n. Rows: n-subsets B; columns: (n+1)-subsets Q;
// entry f({x}) when Q = B + x.
RationalMatrix derivation_matrix(const SetFunction& f, int n);

// The ring map X_x -> f({x}) X_x on square-free monomials of degree n:
// diagonal, entry at B is the product of f({x}) over x in B.
RationalMatrix scaling_matrix(const SetFunction& f, int n);

// D_e * scaling(n+1) == scaling(n) * D_f, compared exactly.
bool check_commutation(const SetFunction& f, int n);

// Full row rank of derivation_matrix(f, n).
bool derivation_surjective(const SetFunction& f, int n);

// True iff g -> fg is injective on degree n (no nonzero g of degree n with
// fg = 0). Guaranteed when f is nonzero on at least 2n+1 points.
bool weighted_kantor_check(const SetFunction& f, int n);

struct RegularityReport {
  bool regular;            // e*u = 0 only for u = 0 among r-invariant u of degree n
  bool hypothesis_holds;   // 2n + 1 <= l, where regularity is guaranteed
  std::size_t invariant_dimension;
};

// Restricts multiplication by e to the r-invariant functions of degree n.
RegularityReport e_regular_on_invariants(const RelStructure& r, int n);

}  // namespace setalg
