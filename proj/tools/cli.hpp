#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dfreq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,        // success, or the queried property holds
    kFalse = 1,     // well-formed negative answer (non-member, failed check)
    kInputError = 2 // parse error, limit exceeded, precondition violated
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfreq::cli
