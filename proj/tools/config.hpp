#pragma once

// Run configuration for the wcs tool: a JSON document with optional sections
// "solver", "phase" and "prior" next to the top-level keys "output_dir",
// "seed" and "jobs". Unknown keys are rejected at every level.
//
// Grids are either arrays of numbers or {"linspace": [lo, hi, count]}.
// Weight schemes are {"scheme": "uniform" | "polynomial" | "random", ...}.

#include "wcs/experiments.hpp"
#include "wcs/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace wcs::cli {

struct RunConfig {
  std::optional<std::string> output_dir;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  solver::SolverOptions solver;
  experiments::PhaseConfig phase;
  experiments::PriorSupportConfig prior;
};

/// Desk-scale defaults: N = 100, 6 x 6 phase grid, 20 trials per cell.
RunConfig default_config();

/// Reads a config file on top of default_config(). Throws ValidationError for
/// bad contents and std::runtime_error when the file cannot be read.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& doc);

/// Copies seed and solver options into the campaign configs.
void propagate(RunConfig& config);

nlohmann::json phase_to_json(const experiments::PhaseConfig& config);
nlohmann::json prior_to_json(const experiments::PriorSupportConfig& config);
nlohmann::json solver_to_json(const solver::SolverOptions& options);
nlohmann::json scheme_to_json(const signals::WeightScheme& scheme);

}  // namespace wcs::cli
