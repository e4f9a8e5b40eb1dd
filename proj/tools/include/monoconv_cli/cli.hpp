#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoconv::cli {

/// Runs one command line. Returns 0 on success, 2 for invalid input and 3
/// for numerical failure; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoconv::cli
