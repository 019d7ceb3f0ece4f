#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conesemi {

/// Runs the command-line interface on `args` (program name excluded).
/// Returns 0 on success, 1 on a domain error, 2 on a usage error or
/// malformed input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace conesemi
