#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfftk::cli {

/// Exit status contract shared by every subcommand.
enum ExitCode : int {
    kOk = 0,           ///< constructed / verified
    kFailed = 1,       ///< verification failure, witness printed
    kUsageError = 2,   ///< usage, parameter, format or I/O error
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfftk::cli
