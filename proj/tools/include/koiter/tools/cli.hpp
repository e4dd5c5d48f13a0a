#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace koiter::tools {

/// \brief Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,      ///< validation or usage error
  kExitNumerical = 2,  ///< numerical failure, or a failed acceptance criterion
};

/**
 * \brief Runs one subcommand (critical-load, sweep, koiter, korn, ansatz, equivalence, mode, verify).
 *
 * `args` excludes the program name. JSON results go to `out`; diagnostics and the synopsis go to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// \brief Entry point wrapper over the process arguments and standard streams.
int run(int argc, char** argv);

}  // namespace koiter::tools
