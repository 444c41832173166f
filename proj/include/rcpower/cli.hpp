#pragma once

#include <ostream>

namespace rcpower::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,       // Fail verdicts, or a construction that does not apply
  kUsage = 2,         // bad arguments or an invalid group spec
  kInconclusive = 3,  // budget exhausted without a Fail
};

/// Subcommands: rc, decide, color, graph, verify. Results go to `out` (or
/// the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcpower::cli
