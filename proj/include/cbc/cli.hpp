#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbc::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,         ///< verification or retrieval failed
    kUsage = 2,
    kBudgetExhausted = 3, ///< an inexact search result was emitted
};

/// Runs the command line `args` (args[0] is the program name), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbc::cli
