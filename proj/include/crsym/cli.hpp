#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crsym {

namespace exit_code {
constexpr int ok = 0;
constexpr int parse = 2;
constexpr int validation = 3;
constexpr int non_termination = 4;
constexpr int golden_mismatch = 5;
} // namespace exit_code

/// Runs the crsym command line; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace crsym
