#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridtree::cli {

/// Exit codes: 0 success or "yes", 1 decision "no", 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridtree::cli
