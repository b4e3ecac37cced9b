#pragma once

#include <string>
#include <vector>

namespace hpdcover::cli {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 success, 1 failed audit, 2 usage/parse error, 3 numeric
/// failure.
int run(const std::vector<std::string>& args);

}  // namespace hpdcover::cli
