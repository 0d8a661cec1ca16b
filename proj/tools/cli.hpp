#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zariski::cli {

// Runs one command line (args excludes the program name). Results and error
// records go to `out` unless --output redirects results to a file. Returns
// the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace zariski::cli
