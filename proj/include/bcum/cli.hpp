#pragma once

// The `bcum` command line: verify, graph and cumulant subcommands.

#include <ostream>
#include <string>
#include <vector>

namespace bcum {

/// `args` excludes the program name. Returns the process exit code: 0 when
/// everything passes, 1 when a check fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcum
