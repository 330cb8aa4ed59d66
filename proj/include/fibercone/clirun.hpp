#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibercone {

/// Runs one CLI invocation (arguments without the program name) and writes
/// the report to out. Exit codes: 0 success, 1 input error, 2 failed
/// mathematical self-check.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibercone
