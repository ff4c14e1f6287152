#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace niemytzki::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kVerificationFailed = 3,
  kUndecidable = 4,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace niemytzki::cli
