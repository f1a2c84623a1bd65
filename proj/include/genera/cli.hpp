#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genera {

// Runs one CLI command. Exit codes: 0 success, 1 usage/parse error,
// 2 validation failure (with a report on out).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genera
