#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asa::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCertificationFailed = 1,
    kUsageError = 2,
};

/// Runs one command (argv without the program name). Writes a single JSON
/// document to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asa::cli
