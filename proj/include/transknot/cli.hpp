#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace transknot::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transknot::cli
