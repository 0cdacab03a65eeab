#ifndef FRAMEKIT_TOOLS_CLI_HPP
#define FRAMEKIT_TOOLS_CLI_HPP

#include <framekit/error.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace framekit::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,        // parse or validation error
    kNoExtension = 3,
    kViolation = 4,
    kNumerical = 5,    // NoConvergence, IdentityMismatch and friends
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace framekit::cli

#endif
