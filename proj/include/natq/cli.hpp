#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace natq {

/// Entry point of the natq tool. `args` excludes the program name. Returns the exit code:
/// 0 success, 1 computation error (or a failing verify check), 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace natq
