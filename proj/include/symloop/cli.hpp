#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symloop::cli {

/// Runs the command line `args` (without the program name). Writes exactly one
/// JSON document to `out` (or help text) and returns the exit status:
///   0  success
///   1  malformed input (bad flags, unparsable JSON or descriptors)
///   2  domain error, reported as {"error": ...}
///   3  `reproduce` ran but some acceptance criterion failed
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symloop::cli
