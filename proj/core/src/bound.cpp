#include "setalg/bound.hpp"

#include <algorithm>
#include <tuple>

#include "setalg/errors.hpp"

namespace setalg {

bool operator<(const RamseySymbol& a, const RamseySymbol& b) {
  return std::tie(a.r, a.k_base, a.k_exponent, a.l) < std::tie(b.r, b.k_base, b.k_exponent, b.l);
}

namespace {

std::string superscript(const Integer& z) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : z.get_str()) out += c == '-' ? "⁻" : kDigits[c - '0'];
  return out;
}

std::string minus_sign(Notation notation) { return notation == Notation::unicode ? "−" : "-"; }
std::string times_sign(Notation notation) { return notation == Notation::unicode ? "·" : ""; }

}  // namespace

std::string render(const RamseySymbol& s, Notation notation) {
  if (notation == Notation::unicode) {
    return "R" + superscript(s.r) + "_{" + s.k_base.get_str() + "^" + s.k_exponent.get_str() + "}(" +
           s.l.get_str() + ")";
  }
  const std::string r = s.r.get_str();
  const std::string sup = r.size() == 1 ? r : "{" + r + "}";
  return "R^" + sup + "_{" + s.k_base.get_str() + "^{" + s.k_exponent.get_str() + "}}(" +
         s.l.get_str() + ")";
}

Expr Expr::integer(Integer value) {
  return Expr(std::make_shared<const Node>(Node{Kind::integer, std::move(value), {}, {}}));
}

Expr Expr::ramsey(RamseySymbol symbol) {
  return Expr(std::make_shared<const Node>(Node{Kind::ramsey, 0, std::move(symbol), {}}));
}

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::sum, 0, {}, {a, b}}));
}

Expr operator*(const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::product, 0, {}, {a, b}}));
}

Expr operator-(const Expr& a, const Expr& b) { return a + Expr::integer(-1) * b; }

std::string Expr::render_tree(Notation notation) const {
  switch (kind()) {
    case Kind::integer:
      return value() < 0 ? minus_sign(notation) + Integer(-value()).get_str() : value().get_str();
    case Kind::ramsey:
      return setalg::render(symbol(), notation);
    case Kind::sum: {
      std::string out = children()[0].render_tree(notation);
      const Expr& rhs = children()[1];
      // a + (-1) * b prints as a - b.
      if (rhs.kind() == Kind::product && rhs.children()[0].kind() == Kind::integer &&
          rhs.children()[0].value() == -1) {
        return out + minus_sign(notation) + rhs.children()[1].render_tree(notation);
      }
      if (rhs.kind() == Kind::integer && rhs.value() < 0) return out + rhs.render_tree(notation);
      return out + "+" + rhs.render_tree(notation);
    }
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        const Expr& c = children()[i];
        std::string part = c.render_tree(notation);
        if (c.kind() == Kind::sum) part = "(" + part + ")";
        out += (i == 0 ? "" : times_sign(notation)) + part;
      }
      return out;
    }
  }
  return {};
}

AffineForm normalize(const Expr& e) {
  AffineForm out;
  switch (e.kind()) {
    case Expr::Kind::integer:
      out.constant = e.value();
      return out;
    case Expr::Kind::ramsey:
      out.coefficients[e.symbol()] = 1;
      return out;
    case Expr::Kind::sum: {
      out = normalize(e.children()[0]);
      const AffineForm rhs = normalize(e.children()[1]);
      out.constant += rhs.constant;
      for (const auto& [s, c] : rhs.coefficients) out.coefficients[s] += c;
      std::erase_if(out.coefficients, [](const auto& kv) { return kv.second == 0; });
      return out;
    }
    case Expr::Kind::product: {
      AffineForm a = normalize(e.children()[0]);
      AffineForm b = normalize(e.children()[1]);
      if (!a.is_constant() && !b.is_constant()) throw Error("bound expression is not affine");
      if (!a.is_constant()) std::swap(a, b);
      const Integer k = a.constant;
      out.constant = k * b.constant;
      if (k != 0) {
        for (const auto& [s, c] : b.coefficients) out.coefficients[s] = k * c;
      }
      return out;
    }
  }
  return out;
}

std::string render(const AffineForm& form, Notation notation) {
  if (form.is_constant()) return Expr::integer(form.constant).render_tree(notation);
  Integer g = 0;
  for (const auto& [s, c] : form.coefficients) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), form.constant.get_mpz_t());
  const std::size_t terms = form.coefficients.size() + (form.constant != 0 ? 1 : 0);

  std::string inner;
  bool first = true;
  auto append = [&](const Integer& coeff, const std::string& body) {
    const Integer c = coeff / g;
    if (c < 0) {
      inner += minus_sign(notation);
    } else if (!first) {
      inner += "+";
    }
    const Integer mag = abs(c);
    if (body.empty()) {
      inner += mag.get_str();
    } else {
      if (mag != 1) inner += mag.get_str() + times_sign(notation);
      inner += body;
    }
    first = false;
  };
  for (const auto& [s, c] : form.coefficients) append(c, render(s, notation));
  if (form.constant != 0) append(form.constant, "");

  if (g == 1) return inner;
  const std::string factor = g.get_str() + times_sign(notation);
  return terms > 1 ? factor + "(" + inner + ")" : factor + inner;
}

std::optional<Integer> known_tau(int m, int n) {
  if (m == 0 || n == 0) return Integer(0);
  if (m == 1) return Integer(2 * n);
  return std::nullopt;
}

namespace {

Integer binomial_big(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

struct RecurrenceConstants {
  int r;
  Integer s;
};

RecurrenceConstants constants(int m, int n) {
  const int r = std::max(m, n);
  const auto top = static_cast<unsigned long>(m * r + n);
  return {r, binomial_big(top, static_cast<unsigned long>(m)) +
                 binomial_big(top, static_cast<unsigned long>(n))};
}

Expr tau_bound(int m, int n);

// phi(m, n) with tau(m - 1, n) replaced by its own bound.
Expr phi_expr(int m, int n) {
  const RecurrenceConstants k = constants(m, n);
  const Expr nu = Expr::ramsey(RamseySymbol{k.r, 5, k.s, n + m});
  return Expr::integer(n) + Expr::integer(m) * (nu - Expr::integer(1)) + tau_bound(m - 1, n);
}

Expr tau_bound(int m, int n) {
  if (const auto exact = known_tau(m, n)) return Expr::integer(*exact);
  return phi_expr(m, n);
}

}  // namespace

BoundExpression tau_upper_expr(int m, int n) {
  if (m < 0 || n < 0) throw Error("negative degree");
  BoundExpression out;
  out.m = m;
  out.n = n;
  const RecurrenceConstants k = constants(m, n);
  out.r = k.r;
  out.s = k.s;
  out.exact = known_tau(m, n);
  out.bound = tau_bound(m, n);
  if (m >= 1) {
    out.phi = phi_expr(m, n);
    out.phi_mm = phi_expr(m, m);
  }
  return out;
}

std::string BoundExpression::render(Notation notation) const {
  return setalg::render(normalize(bound), notation);
}

}  // namespace setalg
