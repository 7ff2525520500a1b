// Command-line driver: subcommand parsing and report formatting for the
// solver, sweep, simulation, and verification entry points.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scangame {

inline constexpr int kExitSuccess = 0;       // command completed
inline constexpr int kExitUsage = 1;         // bad arguments / flag combination
inline constexpr int kExitValidation = 2;    // parameters rejected by the model
inline constexpr int kExitVerification = 3;  // a verification check failed

// Runs the driver on already-split arguments (program name excluded).
// Reports go to `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace scangame
