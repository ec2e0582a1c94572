#pragma once

#include <iosfwd>

namespace qmat {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitIdentityFailure = 1, kExitUsage = 2 };

/// Entry point of the `qmat` tool (subcommands power, fpoly, verify, vzw).
/// Writes results to `out` and diagnostics to `err`; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmat
