#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmi::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 usage or parse error, 2 validation failure, 3 internal
/// consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmi::cli
