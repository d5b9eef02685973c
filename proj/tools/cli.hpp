#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace openmarkov::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 failed check or validation, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace openmarkov::cli
