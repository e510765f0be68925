#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace photonbox::cli {

inline constexpr char const* tool_version = "0.1.0";

/*!
 * Run the command line tool.
 *
 * `args` excludes the program name. Data goes to `out` unless --output is
 * given; diagnostics go to `err`. Returns 0 on success, 2 on argument
 * errors, 1 on numerical failure.
 */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

/// Parse "v1,v2,..." or "lo:hi" (with `points` and "log"/"linear" spacing).
std::vector<double> parse_grid(std::string const& text, int points, std::string const& spacing);

/// Column names emitted by a subcommand, in order.
std::vector<std::string> columns_for(std::string const& subcommand);

}  // namespace photonbox::cli
