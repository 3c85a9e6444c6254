#pragma once

#include <string>
#include <vector>

namespace exlasso::cli {

/// Parses and runs one subcommand. `args` excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
int dispatch(const std::vector<std::string>& args);

}  // namespace exlasso::cli
