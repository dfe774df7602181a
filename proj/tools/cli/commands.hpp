#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setalg::cli {

// Runs one subcommand. args excludes the program name. Returns 0 when every
// claim passes, 1 when one fails or an internal check throws, 2 on usage
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setalg::cli
