#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eeh::cli {

inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;
inline constexpr int kExhausted = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eeh::cli
