#pragma once

// Experiment configuration: INI-style text with sections [scenario],
// [circuit], [sweep], [method], [power], [output]. Keys carry their unit in
// the name (d_ap1_km, p_t_dbm, f_ghz, ...). Values are stored here in those
// configuration units so a written file reloads bit-for-bit; the make_*
// helpers materialize validated SI domain objects.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hapsim/eh_link.hpp"
#include "hapsim/geometry.hpp"
#include "hapsim/joint_opt.hpp"

namespace hapsim {

struct ScenarioSpec {
  double d_ap1_km = 22.0;
  double d_ap2_km = 18.0;
  double d_z_km = 20.0;
  double d_a_km = 0.0;  // default: regular platform directly under the mother
  double g_t_dbi = 43.2;
  double g_r_dbi = 40.0;
  double f_ghz = 2.45;
  double eta = 0.95;
  double tau = 0.1;
  double t_s = 1.0;
  double p_t_dbm = 30.0;
  std::optional<double> p_t_min_dbm{};  // absent -> 0 W
  double bandwidth_mhz = 800.0;
  double temperature_k = 300.0;
  double noise_figure_db = 7.0;

  bool operator==(const ScenarioSpec&) const = default;
};

struct CircuitSpec {
  double m_sat_mw = 24.0;
  double sigma_per_w = 150.0;
  double rho_mw = 14.0;
  // Alternate convention: scale the nonlinear received power by the source
  // transmit power.
  bool transmit_scaled = false;

  bool operator==(const CircuitSpec&) const = default;
};

struct SweepSpec {
  std::string variable = "p_t_dbm";
  double start = 0.0;
  double stop = 50.0;
  double step = 1.0;
  std::vector<std::string> models = {"linear", "nonlinear", "no_eh"};
  // Evaluate harvesting variants at p_t / tau so every variant spends the
  // same energy per block as the baseline.
  bool fair_energy = false;

  bool operator==(const SweepSpec&) const = default;
};

struct MethodSpec {
  std::string name = "exhaustive";  // exhaustive | idfa | qlearn
  std::string model = "linear";     // linear | nonlinear
  std::size_t d_a_points = 201;
  std::size_t tau_points = 99;
  // Explicit grids override the uniform ones when non-empty.
  std::vector<double> d_a_list_km{};
  std::vector<double> tau_list{};
  int n_max = 50;
  double epsilon_bps = 1.0;
  double learning_rate = 0.1;
  double discount = 0.9;
  double exploration_initial = 1.0;
  double exploration_decay = 0.995;
  double exploration_floor = 0.05;
  int episodes = 2000;
  int steps_per_episode = 50;
  std::uint64_t seed = 1;
  // Random-selection baseline: for each listed offset, draw this many random
  // tau values and keep the best rate. 0 disables the baseline.
  int random_draws = 0;
  std::vector<double> baseline_d_a_km{};
  unsigned jobs = 0;  // 0 -> machine parallelism

  bool operator==(const MethodSpec&) const = default;
};

struct PowerSpec {
  double p_req_dbm = -5.0;
  std::vector<double> flight_times_h = {24.0};

  bool operator==(const PowerSpec&) const = default;
};

struct OutputSpec {
  std::string path{};  // empty -> subcommand default
  std::string format = "csv";

  bool operator==(const OutputSpec&) const = default;
};

struct ExperimentConfig {
  ScenarioSpec scenario{};
  CircuitSpec circuit{};
  std::optional<SweepSpec> sweep{};
  MethodSpec method{};
  std::optional<PowerSpec> power{};
  OutputSpec output{};

  bool operator==(const ExperimentConfig&) const = default;
};

// SI materializers (validated).
ScenarioGeometry make_geometry(const ScenarioSpec& s);
RadioParams make_radio(const ScenarioSpec& s);
TimeSwitch make_time_switch(const ScenarioSpec& s);
NonlinearEhCircuit make_circuit(const CircuitSpec& c);
EhModel model_from_name(const std::string& name);  // "linear" | "nonlinear"

// Default parameter set (the documented operating point).
ExperimentConfig default_config();

// Parse + validate. Unknown sections/keys are rejected with line/column
// positions; field violations name the field and the constraint.
ExperimentConfig parse_config(const std::string& text, const std::string& origin);

// Reads the file (config_error when missing/unreadable).
ExperimentConfig load_config(const std::string& path);

// Canonical INI text; load_config(write_config(c)) == c field-for-field.
std::string write_config(const ExperimentConfig& c);

}  // namespace hapsim
