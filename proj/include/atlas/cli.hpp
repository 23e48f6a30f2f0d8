#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atlas {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,  // parse, config, unknown id and math-precondition errors
  kExitIo = 3,
};

/// Runs the harmonic_atlas command line. `args` excludes the program name.
/// Reads HARMONIC_ATLAS_CONFIG from the environment for `verify`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atlas
