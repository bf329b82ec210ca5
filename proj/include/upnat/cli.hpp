#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upnat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  ///< member / verify / express answered no
  kUsage = 2,     ///< usage, syntax or domain error
  kFailure = 3,   ///< condition, capacity or resource error
};

struct RunResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). `in` backs
/// `verify -`. The lattice cap comes from UPERIODIC_LATTICE_CAP when set.
RunResult run(const std::vector<std::string>& args, std::istream& in);

}  // namespace upnat::cli
