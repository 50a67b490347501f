#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permpat::cli {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace permpat::cli
