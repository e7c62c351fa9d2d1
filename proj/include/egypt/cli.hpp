#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egypt {

/// Command dispatch behind the `egypt` binary. Exit status: 0 on success or
/// a passing check, 1 on verification failure / infeasible target, 2 on
/// parse, usage and budget errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egypt
