#pragma once

#include <string>
#include <vector>

namespace liefan::cli {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs the command line front end on the given arguments (without the
/// program name). Deterministic: identical arguments produce byte-identical
/// output. Exit codes: 0 success, 2 invalid input, 3 unsupported algebra,
/// 4 computation window error.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace liefan::cli
