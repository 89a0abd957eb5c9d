#ifndef LINHYP_CLI_HPP
#define LINHYP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace linhyp::cli {

/// Exit codes shared by all subcommands.
enum Exit : int {
    kOk = 0,
    kFailed = 1,      // a violation, or an unexpected search outcome
    kBadInput = 2,    // malformed input, bad parameters or unknown flags
    kBudget = 3,      // a search stopped at its node budget
};

/// Runs the command line (args excludes the program name) writing data to
/// out and progress/diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linhyp::cli

#endif
