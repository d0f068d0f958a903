#pragma once

#include <iosfwd>

namespace fusionring::cli {

/// Exit codes of the fusionring executable.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInvalidInput = 2,
    kCapExceeded = 3,
    kIntegrality = 4,
    kSuiteFailure = 5,
};

/// Entry point shared by the executable and the tests. Results go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusionring::cli
