#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpc::cli {

// Dispatch one command line (without the program name). Returns the
// process exit code: 0 success, 1 verification failure, 2 usage error,
// 3 budget or guard refusal.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpc::cli
