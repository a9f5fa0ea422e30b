#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one cgx command. `args` excludes the program name.
/// Returns 0 on success, 1 on a failed verification (JSON report on `out`),
/// 2 on usage or data errors (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace cgx::cli
