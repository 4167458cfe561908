#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace teleo {

/// Exit codes: 0 success / equivalent / agreement, 1 negative verdict,
/// 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;

/// Runs `teleo <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teleo
