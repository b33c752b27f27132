#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padicla::cli {

// Runs one invocation; `args` excludes the program name. Returns the exit
// status: 0 pass or valid, 1 fail or invalid, 2 usage, parse or precondition
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicla::cli
