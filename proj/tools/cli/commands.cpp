#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "cli/report.hpp"
#include "setalg/bound.hpp"
#include "setalg/incidence.hpp"
#include "setalg/relational.hpp"
#include "setalg/transversal.hpp"
#include "setalg/witnesses.hpp"
#include "setalg/words.hpp"

namespace setalg::cli {

namespace {

struct Options {
  int max_l = 8;
  int n = 2;
  int m = 2;
  int l = 8;
  int max_n = 6;
  int trials = 50;
  int trial_l = 6;  // commutation sweep bounds
  int trial_n = 3;
  std::uint64_t seed = 0;
  std::string strategy = "gadget";
  std::size_t candidates = 32;
  std::string input;
  bool demo = false;
  bool json = false;
};

std::string tag(const char* name, int value) { return std::string(name) + "=" + std::to_string(value); }

void kantor(const Options& o, Report& r) {
  r.inputs = {{"max_l", o.max_l}};
  for (int l = 1; l <= o.max_l; ++l) {
    for (int n = 0; 2 * n <= l; ++n) {
      for (int m = 1; 2 * n + m <= l; ++m) {
        const RationalMatrix inc = inclusion_matrix(l, n, m);
        r.check("rank M_{" + std::to_string(n) + "," + std::to_string(n + m) + "} on l=" + std::to_string(l),
                binomial(l, n), rank(inc));
      }
    }
  }
  // Outside the hypothesis 2n + m <= l the rank drops.
  r.check("control: rank M_{2,3} on l=3 (below C(3,2) = 3)", 1, rank(inclusion_matrix(3, 2, 1)));
}

void tau1n(const Options& o, Report& r) {
  r.inputs = {{"n", o.n}};
  for (int n = 1; n <= o.n; ++n) {
    const WitnessCertificate c = verify(gadget_tau1n(n), static_cast<std::size_t>(2 * n));
    r.check(tag("n", n) + ": e*g = 0 and g != 0", true, true);
    r.check(tag("n", n) + ": tau(supp e + supp g)", 2 * n, c.tau_value);
    r.certificates.push_back(certificate_to_json(c));
  }
}

void gadget(const Options& o, Report& r) {
  r.inputs = {{"m", o.m}, {"n", o.n}};
  const std::size_t expected = static_cast<std::size_t>((o.m + 1) * (o.n + 1) - 2);
  const WitnessCertificate c = verify(gadget_lower(o.m, o.n), expected);
  r.notes.push_back("ground size " + std::to_string(c.pair.ground_size()) + ", |supp f| = " +
                    std::to_string(c.pair.f().terms().size()) + ", |supp g| = " +
                    std::to_string(c.pair.g().terms().size()));
  r.check("fg = 0", true, true);
  r.check("tau = (m+1)(n+1)-2", expected, c.tau_value);
  r.certificates.push_back(certificate_to_json(c));
}

void squares(const Options&, Report& r) {
  const WitnessPair pair = two_squares();
  const WitnessCertificate c = verify(pair, 7);
  const SetFunction fg = product_direct(pair.f(), pair.g());
  r.check("fg(Q) = 0 for all four-subsets Q", binomial(8, 4), binomial(8, 4) - fg.terms().size());
  r.check("tau(supp f + supp g)", 7, c.tau_value);
  const SetFamily joint = pair.joint_support();
  for (int x = 0; x < 8; ++x) {
    r.check("E \\ {" + std::to_string(x) + "} is a minimal transversal", true,
            is_minimal_transversal(Subset::full(8).without(x), joint));
  }
  r.certificates.push_back(certificate_to_json(c));
}

void search(const Options& o, Report& r) {
  r.inputs = {{"m", o.m}, {"n", o.n}, {"l", o.l}, {"strategy", o.strategy}, {"candidates", o.candidates}};
  const SearchResult found = search_best(o.m, o.n, o.l, parse_strategy(o.strategy), o.seed, o.candidates);
  r.notes.push_back("heuristic search: " + std::to_string(found.candidates) + " candidates, " +
                    std::to_string(found.pairs) + " with a cofactor");
  r.check("zero-divisor pair found", true, found.best.has_value());
  if (!found.best) return;
  r.notes.push_back("best tau found (heuristic): " + std::to_string(found.best->tau_value));
  const WitnessCertificate again = verify(found.best->pair);
  r.check("best pair re-verifies with the same tau", found.best->tau_value, again.tau_value);
  r.certificates.push_back(certificate_to_json(*found.best));
}

void bound(const Options& o, Report& r) {
  r.inputs = {{"m", o.m}, {"n", o.n}};
  const BoundExpression b = tau_upper_expr(o.m, o.n);
  const std::string text = b.render(Notation::unicode);
  r.notes.push_back("tau(" + std::to_string(o.m) + "," + std::to_string(o.n) + ") <= " + text);
  r.notes.push_back("latex: " + b.render(Notation::latex));
  r.notes.push_back("r = " + std::to_string(b.r) + ", k = 5^" + b.s.get_str());
  if (b.phi) {
    r.notes.push_back("phi(m,n) = " + b.phi->render_tree() + " = " + render(normalize(*b.phi), Notation::unicode));
    r.notes.push_back("phi(m,m) = " + render(normalize(*b.phi_mm), Notation::unicode));
  }
  r.check("r = max(m,n)", std::max(o.m, o.n), b.r);
  if (b.exact) {
    r.check("bound equals the known value", b.exact->get_str(), text);
  } else {
    r.check("bound keeps a Ramsey symbol unevaluated", true, !normalize(b.bound).is_constant());
  }
  if (o.m == 2 && o.n == 2) {
    r.check("printed form", std::string("2·(R²_{5^30}(4)+2)"), text);
    r.check("printed form (latex)", std::string("2(R^2_{5^{30}}(4)+2)"), b.render(Notation::latex));
  }
}

void profile_cmd(const Options& o, Report& r) {
  std::ifstream in(o.input);
  if (!in) throw Error("cannot read " + o.input);
  const RelStructure s = structure_from_json(Json::parse(in));
  r.inputs = {{"input", o.input}, {"max_n", o.max_n}};
  const int top = std::min(o.max_n, s.base_size());
  std::vector<std::size_t> phi;
  std::string table = "phi:";
  for (int n = 0; n <= top; ++n) {
    phi.push_back(profile(s, n));
    table += " " + std::to_string(phi.back());
  }
  r.notes.push_back(table);
  const int l = s.base_size();
  for (int n = 0; n < top && n < l; ++n) {
    r.check("phi(" + std::to_string(n) + ") <= " + std::to_string(n + 1) + "·phi(" + std::to_string(n + 1) + ")", true,
            phi[n] <= static_cast<std::size_t>(n + 1) * phi[n + 1]);
  }
  for (int n = 0; n <= top; ++n) {
    for (int m = 1; 2 * n + m <= l && n + m <= top; ++m) {
      r.check("phi(" + std::to_string(n) + ") <= phi(" + std::to_string(n + m) + ")", true,
              phi[n] <= phi[n + m]);
    }
  }
  for (int n = 0; 2 * n + 1 <= l && n + 1 <= top; ++n) {
    r.check("e is regular on invariant functions of degree " + std::to_string(n), true,
            e_regular_on_invariants(s, n).regular);
  }
}

void words(const Options& o, Report& r) {
  r.inputs = {{"demo", o.demo}};
  const MonotonicityReport mono = shuffle_monotonicity_check(4, 2);
  r.check("shuffle is strictly increasing (|u|+|v| <= 4, 2 letters)", mono.comparisons, mono.comparisons - mono.violations);

  std::size_t good = 0;
  constexpr std::size_t kProducts = 20;
  for (std::size_t i = 0; i < kProducts; ++i) {
    const WordFunction f = random_word_function(3, 2, 3, o.seed + 2 * i);
    const WordFunction g = random_word_function(3, 2, 3, o.seed + 2 * i + 1);
    const WordFunction fg = shuffle_product(f, g);
    if (!fg.empty() && lead(fg) == max_shuffle(*lead(f), *lead(g))) ++good;
  }
  r.check("lead(fg) = max shuffle of leads", kProducts, good);

  const LayeredGround ground(1, 2, 4);
  const InvStructure h{ground, position_blind_function(ground, 1, o.seed),
                       position_blind_function(ground, 2, o.seed + 1)};
  r.check("position-blind structure is F-L-invariant", true, is_fl_invariant(h));
  const LeadingProductReport lp = leading_product_check(h.f, h.g, h);
  r.notes.push_back("leading sets checked: " + std::to_string(lp.leading_sets) + ", multiplicity " +
                    std::to_string(lp.multiplicity));
  r.check("leading-term equations hold", true, lp.all_hold());
  r.check("fg != 0", true, !product(h.f, h.g).is_zero());
}

Rational random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  return make_rational(num(rng), den(rng));
}

void commutation(const Options& o, Report& r) {
  r.inputs = {{"l", o.trial_l}, {"n", o.trial_n}, {"trials", o.trials}};
  std::mt19937_64 rng(o.seed);
  std::size_t held = 0;
  for (int t = 0; t < o.trials; ++t) {
    const int l = std::uniform_int_distribution<int>(1, o.trial_l)(rng);
    const int n = std::uniform_int_distribution<int>(0, std::min(o.trial_n, l - 1))(rng);
    std::vector<Rational> w(static_cast<std::size_t>(l));
    for (Rational& x : w) x = random_weight(rng);
    held += check_commutation(singleton_weights(w), n) ? 1 : 0;
  }
  r.check("D_e * scaling = scaling * D_f (exact)", o.trials, held);
}

void verify_cmd(const Options& o, Report& r) {
  std::ifstream in(o.input);
  if (!in) throw Error("cannot read " + o.input);
  const Json j = Json::parse(in);
  r.inputs = {{"input", o.input}};
  // Accept a bare certificate or a whole report carrying several.
  const Json certificates = j.contains("certificates") ? j.at("certificates") : Json::array({j});
  if (certificates.empty()) throw Error("no certificate in " + o.input);
  for (std::size_t i = 0; i < certificates.size(); ++i) {
    const Json& cert = certificates[i];
    const std::string at = certificates.size() > 1 ? "certificate " + std::to_string(i) + ": " : "";
    const WitnessCertificate c = verify(pair_from_certificate_json(cert));
    r.check(at + "fg = 0", true, true);
    r.check(at + "tau matches the certificate", cert.at("tau"), c.tau_value);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks in the set algebra of a finite set", "setalg"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.fallthrough();

  std::function<void(const Options&, Report&)> action;
  std::string command;
  auto sub = [&](const char* name, const char* about, auto fn) {
    CLI::App* s = app.add_subcommand(name, about);
    s->callback([&, name, fn] {
      command = name;
      action = fn;
    });
    return s;
  };
  auto positive = CLI::PositiveNumber;

  sub("kantor", "Rank of inclusion matrices for 2n+m <= l <= max-l", kantor)
      ->add_option("--max-l", o.max_l, "Largest ground size")->check(CLI::Range(1, 12));
  sub("tau1n", "Parity gadget certificates for n = 1..N", tau1n)
      ->add_option("--n", o.n, "Largest n")->check(CLI::Range(1, 10));
  {
    CLI::App* s = sub("gadget", "Lower-bound gadget for (m, n)", gadget);
    s->add_option("--m", o.m)->check(positive);
    s->add_option("--n", o.n)->check(positive);
  }
  sub("two-squares", "The two-squares example", squares);
  {
    CLI::App* s = sub("search", "Heuristic search for zero-divisor pairs with large tau", search);
    s->add_option("--m", o.m)->check(CLI::NonNegativeNumber);
    s->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
    s->add_option("--l", o.l)->check(CLI::Range(0, 64));
    s->add_option("--seed", o.seed);
    s->add_option("--strategy", o.strategy)->check(CLI::IsMember({"gadget", "random", "block"}));
    s->add_option("--candidates", o.candidates)->check(positive);
  }
  {
    CLI::App* s = sub("bound", "Symbolic Ramsey upper bound for tau(m, n)", bound);
    s->add_option("--m", o.m)->check(CLI::Range(0, 20));
    s->add_option("--n", o.n)->check(CLI::Range(0, 20));
  }
  {
    CLI::App* s = sub("profile", "Profile table and inequalities of a structure file", profile_cmd);
    s->add_option("--input", o.input, "Structure JSON")->required()->check(CLI::ExistingFile);
    s->add_option("--max-n", o.max_n)->check(CLI::NonNegativeNumber);
  }
  {
    CLI::App* s = sub("words", "Shuffle, lead and invariance checks", words);
    s->add_flag("--demo", o.demo)->required();
    s->add_option("--seed", o.seed);
  }
  {
    CLI::App* s = sub("commutation", "Random checks of the derivation commutation rule", commutation);
    s->add_option("--l", o.trial_l)->check(CLI::Range(1, 10));
    s->add_option("--n", o.trial_n)->check(CLI::NonNegativeNumber);
    s->add_option("--trials", o.trials)->check(positive);
    s->add_option("--seed", o.seed);
  }
  sub("verify", "Re-verify a certificate JSON file", verify_cmd)
      ->add_option("--input", o.input)->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "setalg: " << e.what() << "\n" << app.help();
    return 2;
  }

  Report report;
  report.command = command;
  report.seed = o.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    action(o, report);
  } catch (const NotZeroDivisorError& e) {
    std::string where = "{";
    for (int x : e.offending().members()) where += (where.size() > 1 ? "," : "") + std::to_string(x);
    report.fail(command + " completed", std::string(e.what()) + " at Q = " + where + "}");
  } catch (const std::exception& e) {
    report.fail(command + " completed", e.what());
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start).count();
  if (o.json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace setalg::cli
