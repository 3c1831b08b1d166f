#pragma once

#include <ostream>

namespace efalg::cli {

enum ExitCode : int {
  kPass = 0,
  kPropertyFailure = 1,
  kHypothesisNotMet = 2,
  kInputError = 3,
};

/// Runs the efalg command line. Normal output goes to `out`; failure
/// reports go to `err` as one JSON object per line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efalg::cli
