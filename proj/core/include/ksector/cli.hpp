#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksector::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCertificateFalse = 1,
  kValidationFailure = 2,
  kNumericalFailure = 3,
  kResourceCap = 4,
};

/// Parses an angle argument: a plain number is radians, a "pi" suffix scales
/// by pi ("1e-4pi", "0.25 pi"). Throws ValidationError on anything else.
double parse_angle_spec(const std::string& text);

/// Runs one subcommand (args exclude the program name) writing the report to
/// `out` and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// argv wrapper around run().
int run_main(int argc, char** argv);

}  // namespace ksector::cli
