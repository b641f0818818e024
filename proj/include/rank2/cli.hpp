#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rank2::cli {

/// Runs one command line (args excludes the program name).
/// Exit codes: 0 success, 1 verification failure or computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rank2::cli
