#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srtor::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

// Runs one subcommand. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srtor::cli
