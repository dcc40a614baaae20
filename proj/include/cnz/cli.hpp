#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnz::cli {

/// Runs the command line `args` (without the program name), writing the
/// result or a JSON error object to `out`. Returns the process exit code:
/// 0 success, 1 usage, 2 hypothesis violation, 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace cnz::cli
