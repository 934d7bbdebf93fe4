#ifndef SUNFIND_CLI_HPP
#define SUNFIND_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace sunfind::cli {

enum ExitCode : int {
    success = 0,
    property_violation = 1,
    usage_error = 2,
    budget_exhausted = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream & out, std::ostream & err);

} // namespace sunfind::cli

#endif
