#pragma once

#include <iosfwd>

namespace quotient::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { Ok = 0, Violation = 1, Usage = 2, Cap = 3 };

/// Runs one command line; everything is written to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace quotient::cli
