#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmf::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvalidInput = 3, kNumerical = 4 };

// argv excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmf::cli
