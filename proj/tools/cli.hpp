#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iplogic::cli {

// Runs the command line tool: args are the arguments after the program name,
// normal output goes to out, diagnostics to err.  Returns the process exit
// status: 0 for a positive result (provable / at least one emission), 1 for
// a negative one, 2 for usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iplogic::cli
