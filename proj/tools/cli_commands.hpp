// cli_commands.hpp — implementations of the CLI subcommands, separated from
// main() so they can be driven directly by tests.
#pragma once

#include <iosfwd>
#include <string>

#include "cli_config.hpp"

namespace solvspec::cli {

// Each command writes a '#'-prefixed provenance header followed by one CSV
// table.  Returns the process exit code (0 success, 4 fit non-convergence);
// config errors throw ConfigError (exit 2) and numerical failures
// NumericError (exit 3).
int cmd_spectral(const RunConfig& cfg, std::ostream& out);
int cmd_lorentzian(const RunConfig& cfg, std::ostream& out);
int cmd_dynamics(const RunConfig& cfg, std::ostream& out);
int cmd_fit(const RunConfig& cfg, std::ostream& out);
int cmd_crossover(const RunConfig& cfg, std::ostream& out);
int cmd_datasets(const RunConfig& cfg, std::ostream& out);

// Dispatch by name; throws ConfigError for unknown commands.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out);

} // namespace solvspec::cli
