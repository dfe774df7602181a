#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "setalg/matrix.hpp"
#include "setalg/rational.hpp"
#include "setalg/subset.hpp"

namespace setalg {

// A homogeneous element of the set algebra: a map from the m-subsets of
// {0..l-1} to the rationals, stored sparsely (zero values are never kept).
class SetFunction {
 public:
  using Terms = std::map<Subset, Rational>;

  SetFunction(int ground_size, int degree);
  SetFunction(int ground_size, int degree, std::span<const std::pair<Subset, Rational>> terms);

  int ground_size() const { return ground_size_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational at(Subset s) const;
  // Stores value at s (erasing it when zero). s must have `degree` members
  // inside the ground set.
  void set(Subset s, const Rational& value);
  void add_to(Subset s, const Rational& value);

  SetFamily support() const;

  // Coefficients in ksubsets(ground, degree) order, and back.
  RationalVector to_vector() const;
  static SetFunction from_vector(int ground_size, int degree, std::span<const Rational> coeffs);

  SetFunction& operator+=(const SetFunction& other);
  SetFunction& operator-=(const SetFunction& other);
  SetFunction& operator*=(const Rational& scalar);

  friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }
  friend SetFunction operator-(SetFunction a, const SetFunction& b) { return a -= b; }
  friend SetFunction operator*(SetFunction a, const Rational& s) { return a *= s; }
  friend SetFunction operator*(const Rational& s, SetFunction a) { return a *= s; }
  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  void check_compatible(const SetFunction& other) const;

  int ground_size_;
  int degree_;
  Terms terms_;
};

// The unit: value 1 on the empty set.
SetFunction unit(int ground_size);

// The degree-1 function with value 1 on every singleton.
SetFunction singleton_sum(int ground_size);

// Degree-1 function with the given weights on singletons {0}, {1}, ...
SetFunction singleton_weights(std::span<const Rational> weights);

// fg(Q) = sum over P in [Q]^deg f of f(P) g(Q \ P), computed by pairing
// disjoint support members. The result has degree deg f + deg g (and is zero
// when that exceeds the ground size).
SetFunction product(const SetFunction& f, const SetFunction& g);

// Same product computed literally: every (deg f + deg g)-subset Q, every
// split of Q. Used as an independent check.
SetFunction product_direct(const SetFunction& f, const SetFunction& g);

// First Q (colex) where product_direct(f, g) is nonzero, if any.
std::optional<Subset> first_nonzero_of_product(const SetFunction& f, const SetFunction& g);

// Linearization of g -> fg on the degree-n component: rows are the
// (m+n)-subsets, columns the n-subsets, both in colex order, and
// entry(Q, B) = f(Q \ B) when B is contained in Q.
struct MultOperator {
  SetFunction factor;
  int target_degree;
  RationalMatrix matrix;
};

MultOperator mult_matrix(const SetFunction& f, int n);

// A nonzero g of degree n with fg = 0 (the first normalized kernel vector of
// mult_matrix(f, n)), or nothing when f is regular in that degree.
std::optional<SetFunction> cofactor(const SetFunction& f, int n);

}  // namespace setalg
