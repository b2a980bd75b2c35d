#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace safenum::cli {

/// Runs the command-line tool on the given arguments (program name excluded).
/// Returns the process exit code: 0 on success, 1 on domain errors, 2 on
/// usage errors. For `verify`, 0 exactly when the set is safe.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace safenum::cli
