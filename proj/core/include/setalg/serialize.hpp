#pragma once

#include <nlohmann/json.hpp>

#include "setalg/relational.hpp"
#include "setalg/set_function.hpp"
#include "setalg/witnesses.hpp"
#include "setalg/words.hpp"

namespace setalg {

using Json = nlohmann::json;

// {num, den} with both parts as decimal strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Sorted member list.
Json subset_to_json(Subset s);
Subset subset_from_json(const Json& j, int ground_size);

// {ground_size, degree, terms: [{set, num, den}, ...]} with terms in set order.
Json set_function_to_json(const SetFunction& f);
SetFunction set_function_from_json(const Json& j);

// {base_size, signature: [arity, ...], relations: [[[t0, t1, ...], ...], ...]}.
Json structure_to_json(const RelStructure& r);
RelStructure structure_from_json(const Json& j);

// Array of letters (each a nonempty V-mask).
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// {f, g, tau, tau_witness, formula_expected, match}; formula_expected is null
// when the construction predicts nothing.
Json certificate_to_json(const WitnessCertificate& c);
// The (unchecked) pair stored in a certificate.
WitnessPair pair_from_certificate_json(const Json& j);

}  // namespace setalg
