#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zbrace::cli {

// Exit codes: 0 pass, 1 mathematical failure, 2 usage or input error.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

// Runs the command line with args[0] being the program name. Reads a spec
// from `in` when none is given or it is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zbrace::cli
