#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtls::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kNoConvergence = 3,
  kNodeError = 4,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --out is given; diagnostics and summaries go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtls::cli
