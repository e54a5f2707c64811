#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgog::cli {

/// Runs the `dgog` command line. `args[0]` is the program name.
///
/// Returns 0 on success, 1 on a domain error (one `error:<kind>: message` line on `err`),
/// 2 on a usage error.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dgog::cli
