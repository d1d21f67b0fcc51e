#ifndef CSPOLY_TOOLS_CLI_HPP
#define CSPOLY_TOOLS_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace cspoly::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kResonance = 2,
  kInvalidInput = 3,
  kInternalError = 4,
};

/// Runs body and maps library errors to exit codes: ResonanceError -> 2,
/// InputError -> 3, InvariantViolation (including division by zero) -> 4.
/// The message goes to err.
int guarded(const std::function<int()>& body, std::ostream& err);

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cspoly::cli

#endif
