#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su3::cli {

enum ExitCode : int {
  ok = 0,
  verification_failure = 1,
  usage_error = 2,
  resource_cap = 3,
};

/// Entry point of the `su3-groups` tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace su3::cli
