#pragma once

#include <iosfwd>

namespace meyerlab::cli {

// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kUsage = 1, kNegative = 2 };

// Parses argv and runs one subcommand. Documents go to `out` (or to --out,
// written atomically), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meyerlab::cli
