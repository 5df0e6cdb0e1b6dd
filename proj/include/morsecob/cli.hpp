#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsecob::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudgetExhausted = 3;

/// Runs the tool on `args` (args[0] is the program name) and returns the
/// exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morsecob::cli
