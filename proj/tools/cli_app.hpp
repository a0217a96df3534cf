#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace formation {

// Runs the command line tool on args (program name excluded, natural order).
// Returns the process exit code: 0 success, 1 failed verification, 2 bad
// input or usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace formation
