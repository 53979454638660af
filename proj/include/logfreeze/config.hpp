#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "logfreeze/experiments.hpp"

namespace logfreeze::config {

// Nested JSON layout:
//   {"field":    {"ensemble", "N", "L", "n_grid", "W"},
//    "sampling": {"n_samples", "seed", "workers"},
//    "grids":    {"beta", "x", "q"},
//    "zeta":     {"T", "windows", "points_per_unit", "prime_limit"},
//    "output":   {"emit_samples"}}
// Missing keys keep the value from `base`; unknown keys are a ConfigError.
experiments::ExperimentConfig from_json(const nlohmann::json& j, experiments::ExperimentConfig base = {});
experiments::ExperimentConfig load_file(const std::string& path, experiments::ExperimentConfig base = {});

// Worker count is left out: it must not change any result.
nlohmann::json to_json(const experiments::ExperimentConfig& c);
std::string canonical(const experiments::ExperimentConfig& c);

std::uint64_t fnv1a64(const std::string& s);
std::uint64_t config_hash(const experiments::ExperimentConfig& c);

}  // namespace logfreeze::config
