#pragma once

#include <iosfwd>

namespace bidisk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitConfig = 2;

/// Entry point of the command-line tool. Results go to `out` (or the file
/// named by --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bidisk::cli
