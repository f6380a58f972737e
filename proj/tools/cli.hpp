#pragma once

#include <iosfwd>

namespace stieltjes::cli {

/// Exit codes: 0 answered (NoSolution included), 2 usage, 3 numerical failure.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stieltjes::cli
