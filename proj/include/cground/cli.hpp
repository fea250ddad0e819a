#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cground::cli {

/// Exit codes: 0 success, 1 usage, parse or IO error, 2 preconditions fail
/// or merge refused (also `verify` when a postulate fails), 3 oracle
/// exhausted without a ground, 4 oracle bounds exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cground::cli
