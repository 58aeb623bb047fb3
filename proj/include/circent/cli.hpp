#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circent {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
  kExitUsage = 64,
};

/// "2^-a..2^-b" or a comma-separated list. Throws InvalidArgument when empty
/// or malformed.
std::vector<double> parse_schedule(const std::string& s);

/// Entry point of the `circent` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circent
