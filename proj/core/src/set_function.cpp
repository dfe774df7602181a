#include "setalg/set_function.hpp"

#include <stdexcept>

#include "setalg/errors.hpp"

namespace setalg {

SetFunction::SetFunction(int ground_size, int degree) : ground_size_(ground_size), degree_(degree) {
  if (ground_size < 0 || ground_size > kMaxGround) {
    throw Error("ground size exceeds the 64-element cap");
  }
  if (degree < 0) throw Error("negative degree");
}

SetFunction::SetFunction(int ground_size, int degree,
                         std::span<const std::pair<Subset, Rational>> terms)
    : SetFunction(ground_size, degree) {
  for (const auto& [s, v] : terms) add_to(s, v);
}

Rational SetFunction::at(Subset s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SetFunction::set(Subset s, const Rational& value) {
  if (s.size() != degree_) throw Error("subset cardinality does not match degree");
  if (!s.subset_of(Subset::full(ground_size_))) throw Error("subset outside the ground set");
  if (value == 0) {
    terms_.erase(s);
  } else {
    terms_[s] = value;
  }
}

void SetFunction::add_to(Subset s, const Rational& value) {
  if (value == 0) return;
  set(s, at(s) + value);
}

SetFamily SetFunction::support() const {
  SetFamily family(ground_size_);
  for (const auto& [s, v] : terms_) family.add(s);
  return family;
}

RationalVector SetFunction::to_vector() const {
  RationalVector out(binomial(ground_size_, degree_));
  for (const auto& [s, v] : terms_) out[colex_rank(s)] = v;
  return out;
}

SetFunction SetFunction::from_vector(int ground_size, int degree, std::span<const Rational> coeffs) {
  if (coeffs.size() != binomial(ground_size, degree)) {
    throw Error("coefficient vector length does not match C(l, degree)");
  }
  SetFunction f(ground_size, degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) f.terms_.emplace(colex_unrank(i, degree), coeffs[i]);
  }
  return f;
}

void SetFunction::check_compatible(const SetFunction& other) const {
  if (other.ground_size_ != ground_size_) throw Error("ground-set mismatch");
  if (other.degree_ != degree_) throw Error("degree mismatch in homogeneous sum");
}

SetFunction& SetFunction::operator+=(const SetFunction& other) {
  check_compatible(other);
  for (const auto& [s, v] : other.terms_) add_to(s, v);
  return *this;
}

SetFunction& SetFunction::operator-=(const SetFunction& other) {
  check_compatible(other);
  for (const auto& [s, v] : other.terms_) add_to(s, -v);
  return *this;
}

SetFunction& SetFunction::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [s, v] : terms_) v *= scalar;
  }
  return *this;
}

SetFunction unit(int ground_size) {
  SetFunction f(ground_size, 0);
  f.set(Subset{}, 1);
  return f;
}

SetFunction singleton_sum(int ground_size) {
  if (ground_size < 1) throw Error("empty ground set has no singletons");
  SetFunction f(ground_size, 1);
  for (int x = 0; x < ground_size; ++x) f.set(Subset::of({x}), 1);
  return f;
}

SetFunction singleton_weights(std::span<const Rational> weights) {
  SetFunction f(static_cast<int>(weights.size()), 1);
  for (std::size_t x = 0; x < weights.size(); ++x) f.set(Subset::of({static_cast<int>(x)}), weights[x]);
  return f;
}

namespace {

void require_same_ground(const SetFunction& f, const SetFunction& g) {
  if (f.ground_size() != g.ground_size()) throw Error("ground-set mismatch");
}

}  // namespace

SetFunction product(const SetFunction& f, const SetFunction& g) {
  require_same_ground(f, g);
  SetFunction out(f.ground_size(), f.degree() + g.degree());
  if (out.degree() > out.ground_size()) return out;
  std::map<Subset, Rational> acc;
  for (const auto& [a, fa] : f.terms()) {
    for (const auto& [b, gb] : g.terms()) {
      if (!a.intersects(b)) acc[a | b] += fa * gb;
    }
  }
  for (const auto& [q, v] : acc) out.set(q, v);
  return out;
}

SetFunction product_direct(const SetFunction& f, const SetFunction& g) {
  require_same_ground(f, g);
  const int m = f.degree();
  SetFunction out(f.ground_size(), m + g.degree());
  if (out.degree() > out.ground_size()) return out;
  for_each_subset_of(Subset::full(f.ground_size()), out.degree(), [&](Subset q) {
    Rational sum = 0;
    for_each_subset_of(q, m, [&](Subset p) {
      const auto fi = f.terms().find(p);
      if (fi == f.terms().end()) return;
      const auto gi = g.terms().find(q - p);
      if (gi == g.terms().end()) return;
      sum += fi->second * gi->second;
    });
    out.set(q, sum);
  });
  return out;
}

std::optional<Subset> first_nonzero_of_product(const SetFunction& f, const SetFunction& g) {
  const SetFunction fg = product_direct(f, g);
  if (fg.is_zero()) return std::nullopt;
  return fg.terms().begin()->first;
}

MultOperator mult_matrix(const SetFunction& f, int n) {
  const int l = f.ground_size();
  const int m = f.degree();
  if (n < 0) throw Error("negative degree");
  if (m + n > l) throw Error("degree exceeds ground set");
  auto rows = ksubsets(l, m + n);
  auto cols = ksubsets(l, n);
  RationalMatrix matrix(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Subset b = cols[c];
    for (const auto& [a, fa] : f.terms()) {
      if (!a.intersects(b)) matrix(colex_rank(a | b), c) = fa;
    }
  }
  matrix.set_labels(std::move(rows), std::move(cols));
  return MultOperator{f, n, std::move(matrix)};
}

std::optional<SetFunction> cofactor(const SetFunction& f, int n) {
  if (f.is_zero()) throw Error("zero function has every cofactor");
  const MultOperator op = mult_matrix(f, n);
  const auto basis = nullspace_basis(op.matrix);
  if (basis.empty()) return std::nullopt;
  SetFunction g = SetFunction::from_vector(f.ground_size(), n, basis.front());
  if (!product(f, g).is_zero()) throw std::logic_error("cofactor failed product verification");
  return g;
}

}  // namespace setalg
