#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permsum::cli {

/// Runs one invocation. `args` excludes the program name. Documents go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a domain error,
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Enumeration limit from PERMSUM_MAX_N, or the library default when unset.
/// Throws std::invalid_argument for a value that is not an integer in 1..20.
int enumeration_limit_from_env();

}  // namespace permsum::cli
