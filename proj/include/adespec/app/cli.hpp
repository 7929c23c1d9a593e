#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adespec::app {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_internal = 3 };

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adespec::app
