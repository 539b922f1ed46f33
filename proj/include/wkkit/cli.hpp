#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wkkit {

/// Runs the command-line tool on @p args (without the program name).
/// Returns the process exit code: 0 success, 1 negative verdict, 2 error or
/// resource bound.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

} // namespace wkkit
