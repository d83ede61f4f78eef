#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgl::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kOk = 0, kDomainFailure = 1, kParseFailure = 2, kInconsistent = 3 };

/// Runs the tool on `args` (without the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgl::cli
