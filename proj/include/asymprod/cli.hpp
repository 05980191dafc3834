#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asymprod {

/// Parses and runs one CLI invocation. Returns the process exit code:
/// 0 success/pass, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymprod
