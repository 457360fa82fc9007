#pragma once

#include <string>
#include <vector>

namespace switchsim {

// Full command-line front end: parses argv-style arguments, executes the run,
// and maps failures to exit codes (2 usage/config, 3 resource budget).
int run_cli(const std::vector<std::string>& args);

}  // namespace switchsim
