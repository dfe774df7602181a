#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setalg/serialize.hpp"

namespace setalg::cli {

struct ResultLine {
  std::string claim;
  Json expected;
  Json computed;
  bool pass = false;

  friend bool operator==(const ResultLine&, const ResultLine&) = default;
};

// Outcome of one subcommand. JSON keys are emitted in sorted order, so
// parse + dump reproduces the same bytes.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<ResultLine> results;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  Json certificates = Json::array();
  std::vector<std::string> notes;  // text output only

  // Appends a line whose pass flag is expected == computed.
  void check(std::string claim, Json expected, Json computed);
  void fail(std::string claim, std::string what);

  bool all_pass() const;

  Json to_json() const;
  static Report from_json(const Json& j);

  std::string to_text() const;
};

}  // namespace setalg::cli
