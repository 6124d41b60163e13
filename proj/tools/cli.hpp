#ifndef CURV22_TOOLS_CLI_HPP
#define CURV22_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace curv22::cli {

enum ExitCode { kOk = 0, kSuiteFailure = 1, kInvalid = 2, kIo = 3, kInternal = 4 };

/// Runs `curv22 <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curv22::cli

#endif  // CURV22_TOOLS_CLI_HPP
