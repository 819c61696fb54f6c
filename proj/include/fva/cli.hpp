#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fva::cli {

enum ExitCode : int {
    ok = 0,
    violation = 1,
    usage = 2,
    parse_failure = 3,
    guard = 4,
    internal = 5,
};

/// Runs one command; args excludes the program name. JSON goes to `out`,
/// a short human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fva::cli
