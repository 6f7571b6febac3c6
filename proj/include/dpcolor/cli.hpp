#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dpcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpcolor::cli
