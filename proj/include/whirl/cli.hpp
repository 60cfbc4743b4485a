#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whirl::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kPositive = 0,  // valid / feasible / found
  kNegative = 1,  // invalid / infeasible / not found
  kError = 2,     // usage or data error
};

/// Runs `whirl <subcommand> ...`. `args` excludes the program name.
/// Results go to `out`; diagnostics and key=value progress lines to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whirl::cli
