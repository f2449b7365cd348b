#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace esp::cli {

// Parses and executes one command-line invocation (without the program
// name). Human-readable output goes to `out`, diagnostics to `err`. Returns
// 0 on success, 1 on any input or usage error, 2 on an internal invariant
// violation. Tables are only printed after a command has fully succeeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace esp::cli
