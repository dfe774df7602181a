#pragma once

#include <gmpxx.h>

#include <string>

namespace setalg {

using Integer = mpz_class;

// Exact rationals backed by GMP. Values produced by the helpers below and by
// mpq_class arithmetic are always in lowest terms with a positive denominator.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws setalg::Error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace setalg
