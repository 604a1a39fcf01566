#pragma once

#include <iosfwd>

namespace macc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModelError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs one invocation. Diagnostics and errors go to `err`; binding tables,
// written paths and traces without --trace go to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macc::cli
