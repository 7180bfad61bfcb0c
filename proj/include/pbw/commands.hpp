#pragma once

// Command-line front end. Exit codes: 0 all verdicts pass, 1 a verdict
// failed, 2 input error, 3 resource cap (PBW_MAX_BASIS) exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw {

enum ExitCode { exit_pass = 0, exit_verdict = 1, exit_input = 2, exit_resource = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pbw
