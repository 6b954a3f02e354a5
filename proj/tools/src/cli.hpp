#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graded_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

/// Runs one graded-lab command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graded_lab::cli
