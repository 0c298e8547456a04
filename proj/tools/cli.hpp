#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monalg::cli {

/// Runs one command line (args[0] is the program name). Exit codes: 0 success,
/// 2 bad input or precondition, 3 budget exhausted (partial report), 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monalg::cli
