#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abac::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   ///< a requested verification did not hold
  kUsage = 2,         ///< bad flags or arguments
  kBadInput = 3,      ///< unreadable or malformed automaton file, I/O failure
  kInternal = 4,      ///< invariant violation or closure cap exceeded
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abac::cli
