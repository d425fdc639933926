#ifndef TTPACK_TOOLS_CLI_HPP
#define TTPACK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ttpack::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kBudget = 3,
};

// Runs one command line (args excludes the program name). The report, or
// the fixture text for `ramsey table --format text`, goes to `out` unless
// --out names a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttpack::cli

#endif  // TTPACK_TOOLS_CLI_HPP
