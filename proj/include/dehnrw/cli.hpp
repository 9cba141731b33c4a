#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dehnrw {

// Runs the command-line driver on args (without the program name), writing
// to the given streams. Returns the process exit code: 0 success, 2
// validation failure, 3 audit failure, 4 monitor violation, 64 usage error,
// 1 any other error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace dehnrw
