#pragma once

#include "run_config.hpp"

#include <iosfwd>
#include <stdexcept>

namespace fifcli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInvalidConfig = 2,
    kNonConvergence = 3,
    kCrossCheck = 4,
};

/// A result that ran to completion but failed its own consistency check.
class CrossCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs one command and writes its files under cfg.output. Throws on error.
void run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full front end: parses argv, runs, maps errors to exit codes.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 17 significant digits.
std::string format_double(double v);

} // namespace fifcli
