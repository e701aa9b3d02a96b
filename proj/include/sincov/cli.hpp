#pragma once

#include <iosfwd>

namespace sincov {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed validation, VIOLATED oracle, no solution, cycle
inline constexpr int kExitUsage = 2;    // usage, input or domain error

/// Runs one command. Reports go to --out or `out`; diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sincov
