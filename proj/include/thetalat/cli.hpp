#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thetalat {

// exit codes: 0 success, 1 parse/usage, 2 domain validation, 3 internal
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace thetalat
