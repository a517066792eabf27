#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exring::cli {

/// Exit codes of the command-line interface.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,  // a verification subcommand found a failed property
    kUsage = 2,        // bad invocation, out-of-range argument or exceeded budget
};

/// Parses `args` (without the program name) and runs one subcommand.
/// Results go to `out`, diagnostics and progress to `err`; conversion
/// subcommands read `in` unless --in is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace exring::cli
