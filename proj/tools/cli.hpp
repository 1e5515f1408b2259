// cli.hpp -- command-line front end for the generator

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace condorcet::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1, ///< I/O errors, cross-check mismatches
    kUsage = 2,
    kRefused = 3, ///< oracle size guard
};

/// Runs one cdgen invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace condorcet::cli
