#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symmono::cli {

// Exit codes: 0 ok, 1 a verification check failed, 2 malformed input, 3 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symmono::cli
