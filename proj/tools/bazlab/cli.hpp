#pragma once

#include <iosfwd>

namespace bazlab::cli {

/// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the bazlab executable; reports go to `out`, diagnostics
/// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bazlab::cli
