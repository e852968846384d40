#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mirrorext {

/// Full command-line front end. One JSON envelope per invocation on `out`,
/// human-readable rendering on `err`. Returns the process exit code:
/// 0 success with all checks passing, 1 check failure, 2 hypothesis
/// violation, 3 precision failure, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mirrorext
