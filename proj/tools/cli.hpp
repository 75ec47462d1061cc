#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kronmot::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_invalid_input = 2,
    exit_inconsistent = 3,
    exit_resource_limit = 4,
};

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kronmot::cli
