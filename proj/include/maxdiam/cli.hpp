#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxdiam {

/// Exit codes: 0 verified, 1 property refuted, 2 search budget exceeded,
/// 3 usage or input error.
enum ExitCode : int { kExitOk = 0, kExitRefuted = 1, kExitBudget = 2, kExitUsage = 3 };

/// Runs the command line `args` (program name first) and writes the report
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxdiam
