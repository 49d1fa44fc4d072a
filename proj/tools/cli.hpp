#pragma once

#include <ostream>

namespace longknot::cli {

enum ExitCode : int {
    Ok = 0,
    UsageError = 1,
    DataError = 2,
    VerificationFailure = 3,
};

/// Runs one command line. Results go to `out` (JSON, one object per input
/// line), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace longknot::cli
