#include "setalg/serialize.hpp"

#include <string>

namespace setalg {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] {
    return make_rational(Integer(j.at("num").get<std::string>()),
                         Integer(j.at("den").get<std::string>()));
  });
}

Json subset_to_json(Subset s) { return Json(s.members()); }

Subset subset_from_json(const Json& j, int ground_size) {
  return guarded("subset", [&] {
    const auto members = j.get<std::vector<int>>();
    for (int x : members) {
      if (x < 0 || x >= ground_size) throw Error("subset member outside the ground set");
    }
    const Subset s = Subset::from_members(members);
    if (static_cast<std::size_t>(s.size()) != members.size()) throw Error("repeated subset member");
    return s;
  });
}

Json set_function_to_json(const SetFunction& f) {
  Json terms = Json::array();
  for (const auto& [s, v] : f.terms()) {
    Json t = rational_to_json(v);
    t["set"] = subset_to_json(s);
    terms.push_back(std::move(t));
  }
  return Json{{"ground_size", f.ground_size()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

SetFunction set_function_from_json(const Json& j) {
  return guarded("set function", [&] {
    const int ground = j.at("ground_size").get<int>();
    SetFunction f(ground, j.at("degree").get<int>());
    for (const Json& t : j.at("terms")) {
      f.add_to(subset_from_json(t.at("set"), ground), rational_from_json(t));
    }
    return f;
  });
}

Json structure_to_json(const RelStructure& r) {
  return Json{{"base_size", r.base_size()}, {"signature", r.signature()}, {"relations", r.relations()}};
}

RelStructure structure_from_json(const Json& j) {
  return guarded("structure", [&] {
    RelStructure r(j.at("base_size").get<int>(), j.at("signature").get<std::vector<int>>());
    const Json& rels = j.at("relations");
    if (rels.size() != r.signature().size()) throw Error("relation count does not match signature");
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (const Json& t : rels[i]) r.add_tuple(i, t.get<Tuple>());
    }
    return r;
  });
}

Json word_to_json(const Word& w) { return Json(w.letters()); }

Word word_from_json(const Json& j) {
  return guarded("word", [&] { return Word(j.get<std::vector<Letter>>()); });
}

Json certificate_to_json(const WitnessCertificate& c) {
  Json out{{"f", set_function_to_json(c.pair.f())},
           {"g", set_function_to_json(c.pair.g())},
           {"tau", c.tau_value},
           {"tau_witness", subset_to_json(c.tau_witness)},
           {"formula_expected", nullptr},
           {"match", c.match()}};
  if (c.formula_expected) out["formula_expected"] = *c.formula_expected;
  return out;
}

WitnessPair pair_from_certificate_json(const Json& j) {
  return guarded("certificate", [&] {
    return WitnessPair::unchecked(set_function_from_json(j.at("f")), set_function_from_json(j.at("g")));
  });
}

}  // namespace setalg
