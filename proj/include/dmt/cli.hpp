#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmt::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// usage messages to `err`. Returns 0 on success, 1 on a domain error (with a
/// JSON error object on `out`) and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmt::cli
