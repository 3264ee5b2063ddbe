#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incmat::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 2,
    kUsage = 64,
    kResource = 70,
};

/// Environment variable that overrides the dense memory budget (bytes).
inline constexpr const char* kBudgetEnv = "INCMAT_MEMORY_BUDGET";

/// Parses `args` (without the program name) and runs one subcommand.
/// Documents go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incmat::cli
