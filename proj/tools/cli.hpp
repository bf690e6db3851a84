#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boundedcf::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerifyFailed = 2 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boundedcf::cli
