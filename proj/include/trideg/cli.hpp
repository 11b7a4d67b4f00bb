#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trideg {

// Runs the command line tool in-process. Exit codes:
//   0 success, 2 input error, 3 zero tensor, 4 unsupported format.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trideg
