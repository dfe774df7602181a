#include "setalg/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "setalg/bound.hpp"
#include "setalg/transversal.hpp"

namespace setalg {

WitnessPair WitnessPair::checked(SetFunction f, SetFunction g) {
  if (f.ground_size() != g.ground_size()) throw Error("ground-set mismatch");
  if (f.is_zero() || g.is_zero()) throw Error("zero factor");
  if (!product(f, g).is_zero()) {
    throw NotZeroDivisorError(first_nonzero_of_product(f, g).value_or(Subset{}));
  }
  return WitnessPair(std::move(f), std::move(g));
}

WitnessPair WitnessPair::unchecked(SetFunction f, SetFunction g) {
  return WitnessPair(std::move(f), std::move(g));
}

SetFamily WitnessPair::joint_support() const {
  SetFamily out = f_.support();
  for (const auto& [s, v] : g_.terms()) out.add(s);
  return out;
}

WitnessCertificate verify(const WitnessPair& pair, std::optional<std::size_t> formula_expected) {
  const SetFunction& f = pair.f();
  const SetFunction& g = pair.g();
  if (f.ground_size() != g.ground_size()) throw Error("ground-set mismatch");
  if (f.is_zero() || g.is_zero()) throw Error("zero factor");
  if (const auto q = first_nonzero_of_product(f, g)) throw NotZeroDivisorError(*q);
  const TransversalResult t = tau(pair.joint_support());
  return WitnessCertificate{pair, t.size, t.witness, f.degree() + g.degree(), formula_expected};
}

WitnessPair gadget_tau1n(int n) {
  if (n < 1) throw Error("degenerate degree");
  if (2 * n > kMaxGround) throw Error("ground set exceeds 64 elements");
  const int l = 2 * n;
  SetFunction g(l, n);
  // One bit per block: bit i set means the transversal picks (1, i).
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
    Subset b;
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
      const int bit = static_cast<int>((choice >> i) & 1U);
      b = b.with(gadget_index(bit, i));
      zeros += bit == 0 ? 1 : 0;
    }
    g.set(b, zeros % 2 == 1 ? Rational(-1) : Rational(1));
  }
  return WitnessPair::checked(singleton_sum(l), std::move(g));
}

std::optional<RationalVector> generic_kernel_element(const std::vector<RationalVector>& basis) {
  if (basis.empty()) return std::nullopt;
  const std::size_t dim = basis.front().size();
  std::vector<bool> reachable(dim, false);
  for (const auto& v : basis) {
    for (std::size_t i = 0; i < dim; ++i) reachable[i] = reachable[i] || v[i] != 0;
  }
  // Each coordinate is a nonzero polynomial in t of degree < |basis| where
  // reachable, so some t <= |basis| * dim + 1 avoids all roots.
  const std::size_t limit = basis.size() * dim + 1;
  for (std::size_t t = 1; t <= limit; ++t) {
    RationalVector x(dim, Rational(0));
    Rational power = 1;
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < dim; ++i) x[i] += power * v[i];
      power *= static_cast<long>(t);
    }
    bool full = true;
    for (std::size_t i = 0; i < dim && full; ++i) full = !reachable[i] || x[i] != 0;
    if (full) return x;
  }
  throw std::logic_error("generic kernel element not found");
}

SetFunction gadget_full_support(int n) {
  if (n < 1) throw Error("degenerate degree");
  const int l = 2 * n;
  const MultOperator op = mult_matrix(singleton_sum(l), n);
  const auto x = generic_kernel_element(nullspace_basis(op.matrix));
  if (!x) throw std::logic_error("e is regular in degree n on 2n points");
  SetFunction g = SetFunction::from_vector(l, n, *x);
  if (g.terms().size() != binomial(l, n)) throw std::logic_error("kernel element lacks full support");
  return g;
}

WitnessPair gadget_lower(int m, int n) {
  if (m < 1 || n < 1) throw Error("degenerate degree");
  if (2 * n * m > kMaxGround) throw Error("ground set exceeds 64 elements");
  const int block = 2 * n;
  const int l = block * m;
  const SetFunction local = gadget_full_support(n);

  SetFunction g(l, n);
  for (int i = 0; i < m; ++i) {
    for (const auto& [s, v] : local.terms()) g.set(Subset(s.bits() << (block * i)), v);
  }
  // f(A) = 1 iff A takes one point from each block.
  SetFunction f(l, m);
  std::function<void(int, Subset)> pick = [&](int i, Subset acc) {
    if (i == m) {
      f.set(acc, 1);
      return;
    }
    for (int x = 0; x < block; ++x) pick(i + 1, acc.with(block * i + x));
  };
  pick(0, Subset{});
  return WitnessPair::checked(std::move(f), std::move(g));
}

WitnessPair two_squares() {
  SetFunction f(8, 2);
  SetFunction g(8, 2);
  for (int base : {0, 4}) {
    for (int i = 0; i < 4; ++i) {
      f.set(Subset::of({base + i, base + (i + 1) % 4}), make_rational(-1, 2));
    }
    f.set(Subset::of({base, base + 2}), 1);
    f.set(Subset::of({base + 1, base + 3}), 1);
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 4; b < 8; ++b) g.set(Subset::of({a, b}), 1);
  }
  return WitnessPair::checked(std::move(f), std::move(g));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::gadget: return "gadget";
    case Strategy::random: return "random";
    case Strategy::block: return "block";
  }
  return {};
}

Strategy parse_strategy(const std::string& name) {
  if (name == "gadget") return Strategy::gadget;
  if (name == "random") return Strategy::random;
  if (name == "block") return Strategy::block;
  throw Error("unknown strategy: " + name);
}

namespace {

// Block sizes as even as possible; block_of[x] for each point.
std::vector<int> balanced_blocks(int l, int blocks) {
  std::vector<int> out(static_cast<std::size_t>(l));
  for (int x = 0; x < l; ++x) out[static_cast<std::size_t>(x)] = x * blocks / l;
  return out;
}

SetFunction meets_every_block(int l, int m) {
  const auto block = balanced_blocks(l, m);
  SetFunction f(l, m);
  for (Subset a : ksubsets(l, m)) {
    std::uint64_t hit = 0;
    for (int x : a.members()) hit |= std::uint64_t{1} << block[static_cast<std::size_t>(x)];
    if (std::popcount(hit) == m) f.set(a, 1);
  }
  return f;
}

// Known constructions embedded in l points: the lower-bound gadget's f on
// the first 2nm points, e, a block-meeting f on all points, the two-squares
// f, and a single m-set.
std::vector<SetFunction> gadget_bases(int m, int n, int l) {
  std::vector<SetFunction> out;
  auto embed = [&](const SetFunction& f) {
    SetFunction g(l, m);
    for (const auto& [s, v] : f.terms()) g.set(s, v);
    out.push_back(std::move(g));
  };
  if (m >= 1 && n >= 1 && 2 * n * m <= l) embed(gadget_lower(m, n).f());
  if (m == 1) out.push_back(singleton_sum(l));
  if (m >= 1 && m <= l) out.push_back(meets_every_block(l, m));
  if (m == 2 && l >= 8) {
    const WitnessPair squares = two_squares();
    embed(squares.f());
  }
  SetFunction single(l, m);
  single.set(Subset::full(m), 1);
  out.push_back(std::move(single));
  return out;
}

Rational small_nonzero(std::mt19937_64& rng) {
  static constexpr int kValues[] = {-2, -1, 1, 2};
  return kValues[std::uniform_int_distribution<int>(0, 3)(rng)];
}

SetFunction random_sparse(int m, int l, std::mt19937_64& rng) {
  SetFunction f(l, m);
  std::bernoulli_distribution keep(0.5);
  for (Subset a : ksubsets(l, m)) {
    if (keep(rng)) f.set(a, small_nonzero(rng));
  }
  if (f.is_zero()) f.set(Subset::full(m), 1);
  return f;
}

SetFunction block_structured(int m, int l, std::mt19937_64& rng) {
  const int blocks = std::uniform_int_distribution<int>(2, std::max(2, std::min(l, m + 2)))(rng);
  std::vector<int> block = balanced_blocks(l, blocks);
  std::shuffle(block.begin(), block.end(), rng);
  std::map<std::vector<int>, Rational> table;
  std::uniform_int_distribution<int> value(-2, 2);
  SetFunction f(l, m);
  for (Subset a : ksubsets(l, m)) {
    std::vector<int> pattern(static_cast<std::size_t>(blocks), 0);
    for (int x : a.members()) ++pattern[static_cast<std::size_t>(block[static_cast<std::size_t>(x)])];
    std::sort(pattern.begin(), pattern.end());
    auto it = table.find(pattern);
    if (it == table.end()) it = table.emplace(pattern, Rational(value(rng))).first;
    f.set(a, it->second);
  }
  if (f.is_zero()) f.set(Subset::full(m), 1);
  return f;
}

SetFunction candidate(int m, int l, Strategy strategy, std::uint64_t seed, std::size_t index,
                      const std::vector<SetFunction>& bases) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  switch (strategy) {
    case Strategy::gadget: {
      SetFunction f = bases[index % bases.size()];
      if (index < bases.size()) return f;
      // Rescale the base values; keeps the support.
      SetFunction out(l, m);
      for (const auto& [s, v] : f.terms()) out.set(s, v * small_nonzero(rng));
      return out;
    }
    case Strategy::random: return random_sparse(m, l, rng);
    case Strategy::block: return block_structured(m, l, rng);
  }
  return SetFunction(l, m);
}

}  // namespace

SearchResult search_best(int m, int n, int l, Strategy strategy, std::uint64_t seed,
                         std::size_t candidates) {
  if (m < 0 || n < 0 || m + n > l || l > kMaxGround) throw Error("need m + n <= l <= 64");
  SearchResult out;
  const std::vector<SetFunction> bases = gadget_bases(m, n, l);
  for (std::size_t i = 0; i < candidates; ++i) {
    const SetFunction f = candidate(m, l, strategy, seed, i, bases);
    ++out.candidates;
    if (f.is_zero()) continue;
    const auto g = generic_kernel_element(nullspace_basis(mult_matrix(f, n).matrix));
    if (!g) continue;
    ++out.pairs;
    WitnessCertificate cert =
        verify(WitnessPair::checked(f, SetFunction::from_vector(l, n, *g)));
    if (!out.best || cert.tau_value > out.best->tau_value) out.best = std::move(cert);
  }
  return out;
}

bool DischargeReport::holds() const {
  if (!b_is_transversal || !reduced_product_zero || !reduced_nonzero) return false;
  if (allowed) return Integer(static_cast<unsigned long>(added)) <= *allowed;
  return case_taken == 1 && static_cast<int>(added) <= p0.size() - 1;
}

DischargeReport discharge(const WitnessPair& pair, Subset a) {
  const SetFunction& f = pair.f();
  const SetFunction& g = pair.g();
  const SetFamily supp_f = f.support();
  const SetFamily supp_g = g.support();
  if (!is_transversal(a, supp_f)) throw Error("not a transversal of supp(f)");
  const int m = f.degree();
  const int n = g.degree();

  DischargeReport out;
  out.allowed = known_tau(m - 1, n);
  out.p0 = *std::min_element(supp_f.sets().begin(), supp_f.sets().end(),
                             [&](Subset x, Subset y) { return (x & a).size() < (y & a).size(); });

  if (is_transversal(a | out.p0, supp_g)) {
    out.case_taken = 1;
    out.b = a | out.p0;
  } else {
    out.case_taken = 2;
    const Subset f0 = out.p0 & a;
    const int x0 = f0.members().front();
    const Subset reduced_ground = (Subset::full(f.ground_size()) - a) | f0.without(x0);
    SetFunction f_red(f.ground_size(), m - 1);
    for (const auto& [p, v] : f.terms()) {
      if (p.contains(x0) && p.without(x0).subset_of(reduced_ground)) f_red.set(p.without(x0), v);
    }
    SetFunction g_red(g.ground_size(), n);
    for (const auto& [q, v] : g.terms()) {
      if (q.subset_of(reduced_ground)) g_red.set(q, v);
    }
    out.reduced_nonzero = !f_red.is_zero() && !g_red.is_zero();
    out.reduced_product_zero = product(f_red, g_red).is_zero();
    if (!out.reduced_nonzero || !out.reduced_product_zero) return out;
    SetFamily joint = f_red.support();
    for (const auto& [q, v] : g_red.terms()) joint.add(q);
    out.b = a | tau(joint).witness;
  }
  out.added = (out.b - a).size();
  out.b_is_transversal = is_transversal(out.b, pair.joint_support());
  return out;
}

std::vector<Subset> max_disjoint_subfamily(const std::vector<Subset>& sets) {
  std::vector<Subset> best;
  std::vector<Subset> current;
  std::function<void(std::size_t, Subset)> grow = [&](std::size_t start, Subset used) {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = start; i < sets.size(); ++i) {
      if (current.size() + (sets.size() - i) <= best.size()) return;
      if (sets[i].intersects(used)) continue;
      current.push_back(sets[i]);
      grow(i + 1, used | sets[i]);
      current.pop_back();
    }
  };
  grow(0, Subset{});
  return best;
}

PackingReport disjoint_family_check(const WitnessPair& pair) {
  const int m = pair.f().degree();
  const int n = pair.g().degree();
  PackingReport out;
  out.tau_value = tau(pair.joint_support()).size;
  bool first = true;
  for (const auto& [fs, gv] : pair.g().terms()) {
    std::vector<Subset> avoiding;
    for (const auto& [p, fv] : pair.f().terms()) {
      if (!p.intersects(fs)) avoiding.push_back(p);
    }
    const std::size_t p = max_disjoint_subfamily(avoiding).size();
    out.min_packing = first ? p : std::min(out.min_packing, p);
    first = false;
  }
  if (const auto t = known_tau(m - 1, n)) {
    out.bound = Integer(n) + Integer(m) * Integer(static_cast<unsigned long>(out.min_packing)) + *t;
  }
  return out;
}

}  // namespace setalg
