#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oriftl::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oriftl::cli
