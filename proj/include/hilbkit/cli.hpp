#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hilbkit/ideal.hpp"

namespace hilbkit {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;   // a mathematical check failed or a precondition on the input
inline constexpr int kExitUsage = 2;  // bad arguments, unreadable or malformed files

/// Ideal file: header "ring n=<n> param=<0|1>" (P^n, so n+1 x-variables),
/// then one polynomial per line. Blank lines and lines starting with '#' are
/// ignored. Throws ParseError on a malformed header or polynomial.
Ideal parse_ideal_text(const std::string& text);
Ideal read_ideal_file(const std::string& path);
// Inverse of parse_ideal_text.
std::string ideal_text(const Ideal& ideal);

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbkit
