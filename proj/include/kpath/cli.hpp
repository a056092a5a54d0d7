#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpath::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_verification_failed = 2,
    exit_internal = 3,
};

/// Entry point for the `kpath` tool. Data goes to `out`, progress and
/// diagnostics to `err`. Subcommands: generate, count, search, sweep,
/// verify, spectrum.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kpath::cli
