#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multlab {

// Exit codes: 0 success or true verdict, 1 false verdict, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multlab
