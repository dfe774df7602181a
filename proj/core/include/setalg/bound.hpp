#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setalg/rational.hpp"

namespace setalg {

// The Ramsey number R^r_k(l) with k = k_base^k_exponent, never evaluated.
struct RamseySymbol {
  Integer r;
  Integer k_base;
  Integer k_exponent;
  Integer l;

  friend bool operator==(const RamseySymbol&, const RamseySymbol&) = default;
  friend bool operator<(const RamseySymbol& a, const RamseySymbol& b);
};

enum class Notation { unicode, latex };

std::string render(const RamseySymbol& symbol, Notation notation);

// Expression tree over integers and Ramsey symbols with + and *.
class Expr {
 public:
  enum class Kind { integer, ramsey, sum, product };

  static Expr integer(Integer value);
  static Expr ramsey(RamseySymbol symbol);

  Kind kind() const { return node_->kind; }
  const Integer& value() const { return node_->value; }
  const RamseySymbol& symbol() const { return node_->symbol; }
  const std::vector<Expr>& children() const { return node_->children; }

  // Structural rendering, without simplification.
  std::string render_tree(Notation notation = Notation::unicode) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind;
    Integer value;
    RamseySymbol symbol;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// constant + sum of coefficient * symbol.
struct AffineForm {
  Integer constant = 0;
  std::map<RamseySymbol, Integer> coefficients;

  bool is_constant() const { return coefficients.empty(); }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// Collects like terms. Throws setalg::Error when a product of two symbols appears.
AffineForm normalize(const Expr& e);

// Canonical rendering: symbols in order then the constant, with the gcd of
// all coefficients factored out, e.g. "2·(R²_{5^30}(4)+2)".
std::string render(const AffineForm& form, Notation notation);

// Symbolic upper bound for the transversality constant tau(m, n) from the
// Ramsey recurrence
//   phi(m, n) = n + m (nu(n + m) - 1) + tau(m - 1, n),
//   nu(l) = R^r_k(l), r = max(m, n), s = C(mr+n, m) + C(mr+n, n), k = 5^s,
// expanded down to the known values tau(0, n) = tau(m, 0) = 0 and
// tau(1, n) = 2n.
struct BoundExpression {
  int m = 0;
  int n = 0;
  int r = 0;
  Integer s = 0;                 // k = 5^s for the top level of the recurrence
  std::optional<Integer> exact;  // known exact value of tau(m, n)
  Expr bound = Expr::integer(0);
  std::optional<Expr> phi;       // phi(m, n), m >= 1
  // The recurrence is stated as tau(m, n) <= phi(m, m); this is that literal
  // reading. `bound` uses phi(m, n).
  std::optional<Expr> phi_mm;

  std::string render(Notation notation = Notation::unicode) const;
};

BoundExpression tau_upper_expr(int m, int n);

// tau(0, n) = tau(m, 0) = 0 and tau(1, n) = 2n; nothing otherwise.
std::optional<Integer> known_tau(int m, int n);

}  // namespace setalg
