#include "setalg/rational.hpp"

#include "setalg/errors.hpp"

namespace setalg {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace setalg
