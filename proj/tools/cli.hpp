#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycdom::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_exact = 0,
    exit_usage = 1,
    exit_interval = 2,
    exit_not_dominating = 3,
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycdom::cli
