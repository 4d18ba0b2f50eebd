#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superspherical {

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 a check failed, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace superspherical
