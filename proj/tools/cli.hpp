#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goldspec {

/// Runs the command-line driver. Exit codes: 0 success, 1 analysis or
/// verification failure, 2 usage/parse errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldspec
