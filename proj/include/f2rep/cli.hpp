#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f2rep::cli {

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and progress to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace f2rep::cli
