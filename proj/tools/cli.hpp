#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biplot::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNumericalError = 3 };

/// Runs the `biplot` command line. `args` excludes the program name.
/// Subcommands: analyze, compare, case.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace biplot::cli
