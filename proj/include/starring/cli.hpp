#pragma once

#include <iosfwd>

namespace starring {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;   // a property or verdict failed
inline constexpr int kExitUsage = 2;     // bad arguments, ringspec or literal
inline constexpr int kExitResource = 3;  // carrier bound or search budget exceeded

/// The starring command line. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starring
