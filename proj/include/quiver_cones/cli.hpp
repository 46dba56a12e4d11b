#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcones::cli {

/// Exit codes: 0 success, 1 weight rejected by `member`, 2 usage or validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotMember = 1;
inline constexpr int kExitError = 2;

/// Runs one command line. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcones::cli
