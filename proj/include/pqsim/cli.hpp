#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqsim {

/// Runs one command (simulate | gen | ratio | bounds) with the given
/// arguments (program name excluded). Returns the process exit status:
/// 0 on success, nonzero on any error path.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pqsim
