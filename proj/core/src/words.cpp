#include "setalg/words.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace setalg {

std::strong_ordering compare_letters(Letter a, Letter b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa <=> pb;
  return a <=> b;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a == 0) throw Error("words cannot contain the empty letter");
  }
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = compare_letters(u[i], v[i]);
    if (c != 0) return c;
  }
  return u.size() <=> v.size();
}

std::strong_ordering radix_compare(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return lex_compare(u, v);
}

Word shuffle(const Word& u, Subset positions, const Word& v) {
  const std::size_t total = u.size() + v.size();
  if (static_cast<std::size_t>(positions.size()) != u.size()) {
    throw Error("shuffle positions must match the length of the first word");
  }
  if (total > 64 || static_cast<std::size_t>(positions.span_size()) > total) {
    throw Error("shuffle positions exceed the combined length");
  }
  std::vector<Letter> out(total);
  std::size_t iu = 0, iv = 0;
  for (std::size_t i = 0; i < total; ++i) {
    out[i] = positions.contains(static_cast<int>(i)) ? u[iu++] : v[iv++];
  }
  return Word(std::move(out));
}

Word max_shuffle(const Word& u, const Word& v) {
  const int total = static_cast<int>(u.size() + v.size());
  std::optional<Word> best;
  for_each_subset_of(Subset::full(total), static_cast<int>(u.size()), [&](Subset x) {
    Word w = shuffle(u, x, v);
    if (!best || lex_compare(w, *best) > 0) best = std::move(w);
  });
  return *best;
}

std::vector<Word> subwords(const Word& w) {
  if (w.size() > 24) throw Error("word too long for subword enumeration");
  std::set<std::vector<Letter>> seen;
  const std::uint64_t count = std::uint64_t{1} << w.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Letter> s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((mask >> i) & 1U) s.push_back(w[i]);
    }
    seen.insert(std::move(s));
  }
  std::vector<Word> out;
  for (const auto& s : seen) out.emplace_back(s);
  return out;
}

LayeredGround::LayeredGround(int f_size, int v_size, int c_size)
    : f_size_(f_size), v_size_(v_size), c_size_(c_size) {
  if (f_size < 0 || v_size < 1 || c_size < 0) throw Error("invalid layered ground dimensions");
  if (v_size > 32) throw Error("alphabet base V limited to 32 elements");
  if (size() > kMaxGround) throw Error("layered ground exceeds the 64-element cap");
}

Subset LayeredGround::domain(Subset chain_positions) const {
  Subset out = f_part();
  for (int c : chain_positions.members()) {
    for (int v = 0; v < v_size_; ++v) out = out.with(vc_index(v, c));
  }
  return out;
}

std::strong_ordering operator<=>(const CodedSet& a, const CodedSet& b) {
  const int sa = a.f_part.size(), sb = b.f_part.size();
  // Larger F-parts come first.
  if (sa != sb) return sb <=> sa;
  if (a.f_part != b.f_part) return a.f_part <=> b.f_part;
  return radix_compare(a.word, b.word);
}

CodedSet code(Subset q, const LayeredGround& ground) {
  if (!q.subset_of(Subset::full(ground.size()))) throw Error("subset outside the layered ground");
  CodedSet out{q & ground.f_part(), Word{}};
  std::vector<Letter> letters;
  for (int c = 0; c < ground.c_size(); ++c) {
    Letter letter = 0;
    for (int v = 0; v < ground.v_size(); ++v) {
      if (q.contains(ground.vc_index(v, c))) letter |= Letter{1} << v;
    }
    if (letter != 0) letters.push_back(letter);
  }
  out.word = Word(std::move(letters));
  return out;
}

std::optional<CodedSet> lead(const SetFunction& f, const LayeredGround& ground) {
  std::optional<CodedSet> best;
  for (const auto& [s, v] : f.terms()) {
    CodedSet c = code(s, ground);
    if (!best || c > *best) best = std::move(c);
  }
  return best;
}

namespace {

void require_on_ground(const SetFunction& f, const LayeredGround& ground) {
  if (f.ground_size() != ground.size()) throw Error("ground-set mismatch");
}

// Image of s under the map fixing F and moving chain position from[i] to to[i].
Subset transport(Subset s, const LayeredGround& ground, const std::vector<int>& position_map) {
  Subset out = s & ground.f_part();
  for (int x : (s - ground.f_part()).members()) {
    const int offset = x - ground.f_size();
    const int c = offset / ground.v_size();
    const int v = offset % ground.v_size();
    out = out.with(ground.vc_index(v, position_map[static_cast<std::size_t>(c)]));
  }
  return out;
}

bool colorings_agree(const SetFunction& f, Subset from_domain, const LayeredGround& ground,
                     const std::vector<int>& position_map) {
  bool agree = true;
  for_each_subset_of(from_domain, f.degree(), [&](Subset p) {
    if (agree && sgn(f.at(p)) != sgn(f.at(transport(p, ground, position_map)))) agree = false;
  });
  return agree;
}

}  // namespace

bool check_invariance(const InvStructure& h, int r) {
  require_on_ground(h.f, h.ground);
  require_on_ground(h.g, h.ground);
  const int c_size = h.ground.c_size();
  if (r < 0 || r > c_size) throw Error("invariance order exceeds chain length");
  const auto chains = ksubsets(c_size, r);
  const Subset base = chains.front();
  const auto base_positions = base.members();
  const Subset base_domain = h.ground.domain(base);
  for (std::size_t i = 1; i < chains.size(); ++i) {
    const auto target = chains[i].members();
    std::vector<int> position_map(static_cast<std::size_t>(c_size), -1);
    for (std::size_t j = 0; j < base_positions.size(); ++j) {
      position_map[static_cast<std::size_t>(base_positions[j])] = target[j];
    }
    if (!colorings_agree(h.f, base_domain, h.ground, position_map) ||
        !colorings_agree(h.g, base_domain, h.ground, position_map)) {
      return false;
    }
  }
  return true;
}

bool is_fl_invariant(const InvStructure& h) {
  for (int r = 0; r <= h.ground.c_size(); ++r) {
    if (!check_invariance(h, r)) return false;
  }
  return true;
}

bool is_code_invariant(const SetFunction& f, const LayeredGround& ground) {
  require_on_ground(f, ground);
  std::map<CodedSet, Rational> value_of;
  bool ok = true;
  for_each_subset_of(Subset::full(ground.size()), f.degree(), [&](Subset q) {
    if (!ok) return;
    const auto [it, inserted] = value_of.try_emplace(code(q, ground), f.at(q));
    if (!inserted && it->second != f.at(q)) ok = false;
  });
  return ok;
}

SetFunction position_blind_function(const LayeredGround& ground, int degree, std::uint64_t seed,
                                    double zero_probability) {
  std::map<CodedSet, std::vector<Subset>> classes;
  for_each_subset_of(Subset::full(ground.size()), degree,
                     [&](Subset q) { classes[code(q, ground)].push_back(q); });

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution is_zero(zero_probability);
  std::uniform_int_distribution<long> numerator(-6, 6);
  std::uniform_int_distribution<long> denominator(1, 3);
  auto nonzero = [&] {
    long n = 0;
    while (n == 0) n = numerator(rng);
    return make_rational(n, denominator(rng));
  };

  SetFunction f(ground.size(), degree);
  bool has_free = false;
  const CodedSet* first_free = nullptr;
  for (const auto& [c, sets] : classes) {
    const Rational value = is_zero(rng) ? Rational(0) : nonzero();
    if (c.f_part.empty()) {
      if (!first_free) first_free = &c;
      if (value != 0) has_free = true;
    }
    for (Subset q : sets) f.set(q, value);
  }
  if (!has_free && first_free) {
    const Rational value = nonzero();
    for (Subset q : classes.at(*first_free)) f.set(q, value);
  }
  return f;
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::zero_factor: return "both factors must be nonzero";
    case Hypothesis::structure_not_invariant: return "structure is not F-L-invariant";
    case Hypothesis::f_not_invariant: return "first factor is not invariant";
    case Hypothesis::g_not_invariant: return "second factor is not invariant";
    case Hypothesis::chain_too_short: return "chain shorter than deg f + deg g";
    case Hypothesis::no_support_off_f: return "support of first factor never avoids F";
  }
  return "unknown hypothesis";
}

HypothesisError::HypothesisError(Hypothesis which_)
    : Error("hypothesis failed: " + to_string(which_)), which(which_) {}

LeadingProductReport leading_product_check(const SetFunction& f, const SetFunction& g,
                                           const InvStructure& h) {
  const LayeredGround& ground = h.ground;
  require_on_ground(f, ground);
  require_on_ground(g, ground);
  const int m = f.degree();
  const int n = g.degree();
  if (f.is_zero() || g.is_zero()) throw HypothesisError(Hypothesis::zero_factor);
  if (ground.c_size() < m + n) throw HypothesisError(Hypothesis::chain_too_short);
  if (!is_fl_invariant(h)) throw HypothesisError(Hypothesis::structure_not_invariant);
  if (!is_code_invariant(f, ground)) throw HypothesisError(Hypothesis::f_not_invariant);
  if (!is_code_invariant(g, ground)) throw HypothesisError(Hypothesis::g_not_invariant);
  const bool off_f = std::any_of(f.terms().begin(), f.terms().end(),
                                 [&](const auto& t) { return !t.first.intersects(ground.f_part()); });
  if (!off_f) throw HypothesisError(Hypothesis::no_support_off_f);

  LeadingProductReport report;
  report.lead_f = *lead(f, ground);
  report.lead_g = *lead(g, ground);

  // supp(f,g) and the largest code of a union A + B over it.
  std::optional<CodedSet> lead_pair;
  for (const auto& [a, fa] : f.terms()) {
    for (const auto& [b, gb] : g.terms()) {
      if (a.intersects(b)) continue;
      ++report.disjoint_pairs;
      CodedSet c = code(a | b, ground);
      if (!lead_pair || c > *lead_pair) lead_pair = std::move(c);
    }
  }
  report.pairs_nonempty = report.disjoint_pairs > 0;
  if (!report.pairs_nonempty) return report;
  report.lead_pair = *lead_pair;

  // A0, B0: first support members carrying the leading codes.
  for (const auto& [a, fa] : f.terms()) {
    if (code(a, ground) == report.lead_f) {
      report.a0 = a;
      break;
    }
  }
  for (const auto& [b, gb] : g.terms()) {
    if (code(b, ground) == report.lead_g) {
      report.b0 = b;
      break;
    }
  }
  const Rational f0 = f.at(report.a0);
  const Rational g0 = g.at(report.b0);

  // Check the pair equations at every Q0 realizing lead(f,g).
  std::set<Subset> leading_sets;
  for (const auto& [a, fa] : f.terms()) {
    for (const auto& [b, gb] : g.terms()) {
      if (!a.intersects(b) && code(a | b, ground) == report.lead_pair) leading_sets.insert(a | b);
    }
  }
  report.leading_sets = leading_sets.size();
  report.q0 = *leading_sets.begin();
  report.pair_codes_leading = true;
  report.pair_values_constant = true;
  report.multiplicity_formula = true;
  for (Subset q : leading_sets) {
    std::size_t multiplicity = 0;
    Rational value = 0;
    for_each_subset_of(q, m, [&](Subset a) {
      const Subset b = q - a;
      const Rational fa = f.at(a), gb = g.at(b);
      if (fa == 0 || gb == 0) return;
      ++multiplicity;
      value += fa * gb;
      if (code(a, ground) != report.lead_f || code(b, ground) != report.lead_g) {
        report.pair_codes_leading = false;
      }
      if (fa != f0 || gb != g0) report.pair_values_constant = false;
    });
    if (value != Rational(static_cast<long>(multiplicity)) * f0 * g0) {
      report.multiplicity_formula = false;
    }
    if (q == report.q0) {
      report.multiplicity = multiplicity;
      report.product_at_q0 = value;
    }
  }

  report.product_nonzero = report.product_at_q0 != 0;
  const SetFunction fg = product(f, g);
  const auto lead_fg = lead(fg, ground);
  report.expected_word = max_shuffle(code(report.a0, ground).word,
                                     code(report.b0 - ground.f_part(), ground).word);
  if (lead_fg) report.lead_product = *lead_fg;
  report.lead_formula = lead_fg && *lead_fg == report.lead_pair &&
                        report.lead_pair.f_part == (report.q0 & ground.f_part()) &&
                        report.lead_pair.word == report.expected_word;
  return report;
}

WordFunction shuffle_product(const WordFunction& f, const WordFunction& g) {
  WordFunction out;
  for (const auto& [u, fu] : f) {
    for (const auto& [v, gv] : g) {
      const Rational coeff = fu * gv;
      const int total = static_cast<int>(u.size() + v.size());
      for_each_subset_of(Subset::full(total), static_cast<int>(u.size()),
                         [&](Subset x) { out[shuffle(u, x, v)] += coeff; });
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::optional<Word> lead(const WordFunction& f) {
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (it->second != 0) return it->first;
  }
  return std::nullopt;
}

bool final_segment_ideal_check(const WordPredicate& down_closed, const WordFunction& f,
                               const WordFunction& g) {
  const WordFunction fg = shuffle_product(f, g);
  for (const WordFunction* part : {&f, &g, &fg}) {
    for (const auto& [w, value] : *part) {
      if (!down_closed(w)) continue;
      for (const Word& s : subwords(w)) {
        if (!down_closed(s)) throw Error("predicate is not closed under subwords");
      }
    }
  }
  const bool f_avoids = std::none_of(f.begin(), f.end(), [&](const auto& kv) { return down_closed(kv.first); });
  if (!f_avoids) return true;
  return std::none_of(fg.begin(), fg.end(), [&](const auto& kv) { return down_closed(kv.first); });
}

WordFunction random_word_function(int max_length, int alphabet_size, std::size_t terms,
                                  std::uint64_t seed) {
  if (max_length < 1 || alphabet_size < 1 || terms < 1) throw Error("empty word function requested");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(alphabet_size));
  std::uniform_int_distribution<int> value(-3, 3);
  WordFunction out;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<Letter> letters(static_cast<std::size_t>(length(rng)));
    for (Letter& a : letters) a = letter(rng);
    int v = 0;
    while (v == 0) v = value(rng);
    out[Word(std::move(letters))] = v;
  }
  return out;
}

namespace {

// All words of the given length over 1..alphabet_size, in lexicographic order.
std::vector<Word> all_words(int length, int alphabet_size) {
  std::vector<Word> out{Word()};
  for (int i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (int a = 1; a <= alphabet_size; ++a) {
        std::vector<Letter> letters = w.letters();
        letters.push_back(static_cast<Letter>(a));
        next.emplace_back(std::move(letters));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return lex_compare(a, b) < 0; });
  return out;
}

}  // namespace

MonotonicityReport shuffle_monotonicity_check(int max_total, int alphabet_size) {
  MonotonicityReport report;
  for (int total = 0; total <= max_total; ++total) {
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      const std::vector<Word> us = all_words(p, alphabet_size);
      const std::vector<Word> vs = all_words(q, alphabet_size);
      for_each_subset_of(Subset::full(total), p, [&](Subset x) {
        // Index order is lexicographic, so (i, j) <= (i2, j2) componentwise
        // is the pair order.
        for (std::size_t i = 0; i < us.size(); ++i) {
          for (std::size_t j = 0; j < vs.size(); ++j) {
            const Word w = shuffle(us[i], x, vs[j]);
            for (std::size_t i2 = i; i2 < us.size(); ++i2) {
              for (std::size_t j2 = j; j2 < vs.size(); ++j2) {
                if (i2 == i && j2 == j) continue;
                ++report.comparisons;
                if (lex_compare(w, shuffle(us[i2], x, vs[j2])) >= 0) ++report.violations;
              }
            }
          }
        }
      });
    }
  }
  return report;
}

}  // namespace setalg
