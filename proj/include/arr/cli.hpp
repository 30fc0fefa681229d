#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arr {

// Runs one CLI command; returns the process exit code.
//   0  success
//   1  domain error or malformed input (message names the violated rule)
//   2  resource guard fired
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arr
