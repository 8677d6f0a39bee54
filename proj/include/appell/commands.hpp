#pragma once

// Subcommand drivers behind the appell executable.
// Exit codes: 0 pass, 1 validation failure, 2 non-convergence, 3 I/O or config error.

#include <iosfwd>
#include <optional>
#include <string>

#include "appell/config.hpp"

namespace appell {

enum ExitCode { kExitPass = 0, kExitValidation = 1, kExitNonConvergence = 2, kExitIo = 3 };

struct CliOptions {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> degree;
  std::optional<long> precision;
  bool svg = true;
  bool reuse = false;
};

// Config with the command-line overrides applied.
RunConfig effective_config(RunConfig cfg, const CliOptions& opts);
mp::Precision run_precision(const RunConfig& cfg);
std::string zeros_path(const RunConfig& cfg, int n);

int cmd_coeffs(const RunConfig& cfg, std::ostream& log);
int cmd_zeros(const RunConfig& cfg, const CliOptions& opts, std::ostream& log);
int cmd_attractor(const RunConfig& cfg, const CliOptions& opts, std::ostream& log);
int cmd_validate(const RunConfig& cfg, const CliOptions& opts, std::ostream& log);

// Loads the config, dispatches, and maps exceptions onto exit codes.
int run_command(const std::string& name, const CliOptions& opts, std::ostream& log, std::ostream& err);

}  // namespace appell
