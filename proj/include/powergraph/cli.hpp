#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powergraph {

/// Runs the command-line interface on the given arguments (program name
/// excluded).  Returns the process exit code: 0 when all requested checks
/// pass, 1 on a failed check (first counterexample printed), 2 on usage
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powergraph
