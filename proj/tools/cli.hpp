#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nambu::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (args excludes the program name) and returns the
/// exit code. The report goes to `out` in one write; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nambu::cli
