#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcforge::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

/// Runs one invocation. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcforge::cli
