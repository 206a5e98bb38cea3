#pragma once

// Experiment drivers: parameter sweeps, optimizer runs, positioning
// comparisons and mission-energy series, all emitting deterministic CSV/JSON.

#include <string>
#include <vector>

#include "hapsim/config.hpp"
#include "hapsim/joint_opt.hpp"
#include "hapsim/positioning.hpp"

namespace hapsim {

struct SweepRow {
  double sweep_value = 0.0;
  std::string model;
  double harvested_energy_j = 0.0;
  double p_eh_w = 0.0;
  double p_r_w = 0.0;
  double snr = 0.0;
  double rate_bps = 0.0;
  // Budget columns, filled when the [power] block is present.
  double p_req_w = 0.0;
  double e_borrowed_j = 0.0;
  double p_augmented_w = 0.0;
  double e_surplus_j = 0.0;
};

// One row per sweep point per model variant, in sweep order then model order.
// Sweep variables: p_t_dbm, d_ap2_km, d_a_km, d_1_km, g_t_dbi, g_r_dbi,
// f_ghz, tau.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows, bool budget_columns);

struct OptimizeArtifacts {
  OptimizationResult result;
  std::string summary_json;  // method, grids, seed, hyperparameters, result
  std::string trace_csv;     // index,objective
};

// Dispatches on cfg.method.name.
OptimizeArtifacts run_optimize(const ExperimentConfig& cfg);

struct PositionRow {
  double d_ap2_km = 0.0;
  std::string model;
  double d_a_opt_m = 0.0;
  double rate_opt_bps = 0.0;
  double rate_baseline_bps = 0.0;
};

// Sweeps the regular-platform altitude, re-deriving the optimal offset at
// each point (closed form for the linear model, endpoint rule for the
// nonlinear one) and comparing against a caller-supplied fixed offset.
std::vector<PositionRow> run_position(const ExperimentConfig& cfg,
                                      double baseline_d_a_km);

std::string position_csv(const std::vector<PositionRow>& rows);

struct MissionRow {
  double sweep_value = 0.0;
  std::string model;
  double flight_time_h = 0.0;
  double e_total_j = 0.0;
};

// Mission-total harvested energy per sweep point and flight duration.
std::vector<MissionRow> run_mission(const ExperimentConfig& cfg);

std::string mission_csv(const std::vector<MissionRow>& rows);

}  // namespace hapsim
