#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rookposet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `rookposet` binary. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rookposet::cli
