#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multiplex::cli {

enum ExitStatus : int { kSuccess = 0, kMismatch = 1, kUsage = 2, kDomain = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace multiplex::cli
