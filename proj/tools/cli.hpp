#pragma once

#include <iosfwd>

namespace lerch::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kAccuracy = 1;
inline constexpr int kDomain = 2;
inline constexpr int kUsage = 64;

/// Runs one command. Output goes to `out` unless --out names a file;
/// errors and usage text go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lerch::cli
