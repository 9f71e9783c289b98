#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chessspace::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kDomainError = 2 };

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chessspace::cli
