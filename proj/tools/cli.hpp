#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glauber::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kInvalidModel = 3,
  kCapExceeded = 4,
};

/// args excludes the program name. Results go to out as JSON, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glauber::cli
