#pragma once

#include <iosfwd>

namespace jarnik::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitDegenerate = 4;

/// Runs one subcommand. The artifact goes to --out (summary to `out`) or to `out` (summary to `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jarnik::cli
