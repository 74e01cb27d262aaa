#pragma once

#include <iosfwd>

#include "fbp/cli/config.hpp"

namespace fbp::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Full command line (argv[0] is the program name). Artifacts go to the
/// configured output directory; summaries to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_radius(const RunConfig& config, std::ostream& out);
int cmd_bessel_table(const RunConfig& config, std::ostream& out);
int cmd_expansion(const RunConfig& config, std::ostream& out);
int cmd_bifpoints(const RunConfig& config, std::ostream& out);
int cmd_branch(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out);

}  // namespace fbp::cli
