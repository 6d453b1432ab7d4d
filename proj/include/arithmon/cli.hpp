#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arithmon {

/// Command-line driver (args exclude the program name). Writes results
/// to out and diagnostics to err. Exit code 0 on success, 1 on parse,
/// usage or domain errors, 2 on an internal invariant violation (the
/// symbolic and window-referee answers disagreeing).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace arithmon
