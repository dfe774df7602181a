#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace setalg::cli {

void Report::check(std::string claim, Json expected, Json computed) {
  const bool pass = expected == computed;
  results.push_back({std::move(claim), std::move(expected), std::move(computed), pass});
}

void Report::fail(std::string claim, std::string what) {
  results.push_back({std::move(claim), "no error", std::move(what), false});
}

bool Report::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const ResultLine& r) { return r.pass; });
}

Json Report::to_json() const {
  Json lines = Json::array();
  for (const ResultLine& r : results) {
    lines.push_back({{"claim", r.claim}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
  }
  Json out{{"command", command},
           {"inputs", inputs},
           {"results", std::move(lines)},
           {"seed", seed},
           {"elapsed_ms", elapsed_ms}};
  if (!certificates.empty()) out["certificates"] = certificates;
  return out;
}

Report Report::from_json(const Json& j) {
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    for (const Json& line : j.at("results")) {
      r.results.push_back({line.at("claim").get<std::string>(), line.at("expected"), line.at("computed"),
                           line.at("pass").get<bool>()});
    }
    if (j.contains("certificates")) r.certificates = j.at("certificates");
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

namespace {

std::string show(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << " (seed " << seed << ", " << elapsed_ms << " ms)\n";
  for (const std::string& note : notes) out << "  " << note << "\n";
  std::size_t passed = 0;
  for (const ResultLine& r : results) {
    passed += r.pass ? 1 : 0;
    out << (r.pass ? "  PASS  " : "  FAIL  ") << r.claim << ": expected " << show(r.expected)
        << ", computed " << show(r.computed) << "\n";
  }
  out << passed << "/" << results.size() << " claims passed\n";
  return out.str();
}

}  // namespace setalg::cli
