#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdg {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on domain errors such as an invalid table or unknown builtin, and 2 on
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace zdg
