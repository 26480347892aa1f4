#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpdo {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 success, 1 usage or expression syntax error, 2 mathematical error,
/// 3 obstruction or failed verification (a diagnosis, not a crash).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpdo
