#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncvif {

// Exit codes: 0 success, 1 replication mismatch, 2 input or usage error,
// 3 numerically degenerate input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncvif
