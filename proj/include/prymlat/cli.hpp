#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prymlat::cli {

// Full command-line surface; testable in-process.  `args` excludes the
// program name.  Returns the process exit code:
//   0  success
//   1  input or validation error
//   2  internal invariant violation
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace prymlat::cli
