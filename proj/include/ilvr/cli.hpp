#pragma once

#include <iosfwd>

namespace ilvr::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,  // I/O and anything unexpected
    kUsage = 2,
    kDomain = 3,  // a price path reached p <= 0
    kRegime = 4,  // analytic evaluation outside the Brownian regime
};

// Entry point behind the `ilvr` executable. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ilvr::cli
