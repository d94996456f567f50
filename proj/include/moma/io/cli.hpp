#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moma {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUndecided = 1;
inline constexpr int kExitInputError = 2;

// Command-line entry point. args excludes the program name. Results go to out unless
// --output is given; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moma
