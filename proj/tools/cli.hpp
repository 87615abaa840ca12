#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smallgon::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kConstructionFailed = 3;
inline constexpr int kIoError = 4;

/// Dispatches `construct`, `table`, `verify` and `asymptotics`.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smallgon::cli
