#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setalg/errors.hpp"
#include "setalg/set_function.hpp"
#include "setalg/subset.hpp"

namespace setalg {

// Raised by verify() when fg is not identically zero.
class NotZeroDivisorError : public Error {
 public:
  explicit NotZeroDivisorError(Subset offending)
      : Error("not a zero-divisor pair"), offending_(offending) {}
  Subset offending() const { return offending_; }

 private:
  Subset offending_;
};

// Nonzero f, g over the same ground set with fg = 0.
class WitnessPair {
 public:
  // Checks f != 0, g != 0 and fg = 0; throws otherwise.
  static WitnessPair checked(SetFunction f, SetFunction g);
  // No checks; lets callers build deliberately broken pairs for verify().
  static WitnessPair unchecked(SetFunction f, SetFunction g);

  const SetFunction& f() const { return f_; }
  const SetFunction& g() const { return g_; }
  int ground_size() const { return f_.ground_size(); }

  // supp(f) together with supp(g).
  SetFamily joint_support() const;

 private:
  WitnessPair(SetFunction f, SetFunction g) : f_(std::move(f)), g_(std::move(g)) {}
  SetFunction f_;
  SetFunction g_;
};

struct WitnessCertificate {
  WitnessPair pair;
  std::size_t tau_value = 0;
  Subset tau_witness;
  int checked_product_degree = 0;
  std::optional<std::size_t> formula_expected;  // value predicted by the construction

  bool match() const { return !formula_expected || *formula_expected == tau_value; }
};

// Recomputes fg by direct summation over every split and tau of the joint
// support. Throws NotZeroDivisorError naming the first Q with fg(Q) != 0.
WitnessCertificate verify(const WitnessPair& pair,
                          std::optional<std::size_t> formula_expected = std::nullopt);

// Ground element (b, i) of {0,1} x {0..n-1}.
constexpr int gadget_index(int b, int i) { return 2 * i + b; }

// f = e on 2n points, g = +-1 on the transversals of the blocks {0,1} x {i}
// (-1 when the transversal has an odd number of first coordinates 0).
WitnessPair gadget_tau1n(int n);

// g of degree n on 2n points with eg = 0 and g(B) != 0 for every n-set B.
SetFunction gadget_full_support(int n);

// m blocks of 2n points; g is a full-support gadget on each block and
// f(A) = 1 iff A meets every block. tau of the joint support is mn + m + n - 1.
WitnessPair gadget_lower(int m, int n);

// Two squares on {0..3} and {4..7}: f = -1/2 on sides, 1 on diagonals;
// g = 1 on the 16 pairs joining the squares.
WitnessPair two_squares();

// A kernel element of maximal support: sum of t^j v_j over the basis for the
// first t = 1, 2, ... at which no coordinate cancels. Empty basis gives nothing.
std::optional<RationalVector> generic_kernel_element(const std::vector<RationalVector>& basis);

enum class Strategy { gadget, random, block };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

struct SearchResult {
  std::optional<WitnessCertificate> best;
  std::size_t candidates = 0;  // f's examined
  std::size_t pairs = 0;       // f's admitting a cofactor
};

// Heuristic: tries candidate f's of degree m on l points, pairs each with a
// generic kernel element of mult_matrix(f, n) and keeps the largest tau.
// Deterministic in seed.
SearchResult search_best(int m, int n, int l, Strategy strategy, std::uint64_t seed,
                         std::size_t candidates = 32);

// Builds the transversal B of supp(f) u supp(g) promised for a transversal A
// of supp(f): either A u P0, or A u H with H a minimum transversal of the
// reduced pair (f', g') obtained by fixing one point x0 of P0 n A.
struct DischargeReport {
  int case_taken = 0;  // 1 or 2
  Subset p0;
  Subset b;
  std::size_t added = 0;                // |B \ A|
  std::optional<Integer> allowed;       // tau(m - 1, n) when known
  bool reduced_product_zero = true;     // case 2: f'g' = 0
  bool reduced_nonzero = true;          // case 2: f', g' both nonzero
  bool b_is_transversal = false;

  bool holds() const;
};

DischargeReport discharge(const WitnessPair& pair, Subset a);

// For every F in supp(g), the largest number p(F) of pairwise disjoint members
// of supp(f) avoiding F. Checks tau(supp f u supp g) <= n + m p + tau(m-1, n)
// for p the minimum of p(F), in contrapositive form.
struct PackingReport {
  std::size_t tau_value = 0;
  std::size_t min_packing = 0;
  std::optional<Integer> bound;  // n + m p + tau(m - 1, n) when tau(m - 1, n) is known

  bool holds() const { return !bound || Integer(static_cast<unsigned long>(tau_value)) <= *bound; }
};

PackingReport disjoint_family_check(const WitnessPair& pair);

// Largest pairwise disjoint subfamily, by exhaustive search.
std::vector<Subset> max_disjoint_subfamily(const std::vector<Subset>& sets);

}  // namespace setalg
