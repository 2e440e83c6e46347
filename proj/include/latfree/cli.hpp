#pragma once

#include <iosfwd>

namespace latfree {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCounterexample = 2 };

/// Entry point of the `latfree` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latfree
