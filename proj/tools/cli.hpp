#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace penta::cli {

/// Process exit codes.
enum Exit : int { pentagraph = 0, not_pentagraph = 1, indeterminate = 2, input_error = 3 };

/// Runs the command line `args` (program name excluded), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace penta::cli
