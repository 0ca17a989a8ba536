#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gpwh/config.hpp"

namespace gpwh {

inline constexpr int kExitPass = 0;
inline constexpr int kExitInvariantFailure = 2;
inline constexpr int kExitError = 3;

inline const std::vector<std::string> kCommands{
    "validate", "reduce", "walls-audit", "kernel-report", "invariance-test", "b2-audit",
    "convergence"};

/// A CSV sidecar produced by a command.
struct Artifact {
  std::string name;
  std::string content;
};

struct RunResult {
  int exit_code = kExitPass;
  nlohmann::json report;
  std::string summary;
  std::vector<Artifact> artifacts;
};

/// Runs one subcommand. Never throws for domain errors: they are mapped to
/// exit code 3 with report["error"]["code"] one of unknown_command,
/// schema_violation, structural_error, enumeration_cap, numerical_error.
RunResult run(const ExperimentConfig& config, const std::string& command);

/// The error report used for failures before a config exists.
RunResult error_result(const std::string& command, const std::string& code,
                       const std::string& message);

}  // namespace gpwh
