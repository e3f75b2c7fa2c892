#pragma once

#include <string>
#include <vector>

namespace mutkit::cli {

// Dispatches one command line. Exit codes: 0 success, 1 domain error
// (non-Laurent substitution, undefined mutation, pipeline failure, ...),
// 2 malformed input (bad flags, bad files).
int run(const std::vector<std::string>& args);

}  // namespace mutkit::cli
