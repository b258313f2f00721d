#pragma once

#include <ostream>

namespace lightsout {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUnsolvable = 1, kExitUsage = 2, kExitBudget = 3 };

/// Entry point of the `lightsout` tool. Payload goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lightsout
