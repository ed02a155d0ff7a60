#pragma once

#include <iosfwd>

namespace gft::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,        // success / verified
  kFailed = 1,    // a verification report has passed=false
  kUsage = 2,     // usage or parameter validation error
};

/// Runs one gftool invocation. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gft::cli
