#pragma once

namespace xorcert::cli {

/// Exit codes: 0 certified or succeeded, 2 uncertain or failed, 1 usage or
/// IO error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

int run(int argc, char** argv);

}  // namespace xorcert::cli
