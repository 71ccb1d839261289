#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace t2sum::cli {

enum ExitCode : int { kAffirmative = 0, kNegative = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Graph arguments are
/// "-" for stdin, a file path, "<kind>:<n>" for a standard graph, or inline
/// graph text.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace t2sum::cli
