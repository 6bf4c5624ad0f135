#pragma once

#include <ostream>

namespace rumor::cli {

/// Exit codes: 0 success or all checks pass, 1 a verification failed,
/// 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rumor::cli
