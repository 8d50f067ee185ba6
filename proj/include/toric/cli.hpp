#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric {

/// Command-line front end. `args` excludes the program name. Writes one JSON
/// report to `out` and diagnostics to `err`. Returns 0 when every check
/// passes, 1 when some check fails, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
