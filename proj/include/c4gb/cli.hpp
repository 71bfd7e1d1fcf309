#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c4gb {

// Command dispatch for the `connect4` tool. Exit codes: 0 success,
// 1 verification failure, 2 invalid input, 3 resource guard tripped.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace c4gb
