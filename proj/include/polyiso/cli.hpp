#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyiso::cli {

/// Runs one command line (args excludes the program name). Returns 0 for a
/// positive decision or plain success, 1 for a negative decision and 2 for
/// usage or input errors; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyiso::cli
