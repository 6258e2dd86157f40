#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exactla {

/// Process exit codes of the exactla tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1, ///< some identity check failed
    exit_parse = 2,     ///< bad flags, JSON or parameter values
    exit_shape = 3,     ///< shape error, ring mismatch or unsupported operation
};

/// Runs the command line (without the program name). Reports and results
/// go to out (or --out), diagnostics and suite summaries to err.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace exactla
