#pragma once

#include <iosfwd>

namespace vacpol::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
    kOk = 0,
    kValidationFailed = 1,
    kInvalidParameters = 2,
    kInfraredDivergence = 3,
    kNumericalFailure = 4,
};

/// Full command-line front end: vacpol <profile|validate|spectrum|heat-kernel|asymptotics> [flags].
/// Tables go to `out`, diagnostics and warnings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vacpol::cli
