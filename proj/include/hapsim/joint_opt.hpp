#pragma once

// Joint optimization of the offset d_a and the harvesting fraction tau over a
// discrete grid, three ways:
//
//   idfa        - coordinate descent: alternate argmax over the d_a axis with
//                 tau fixed and over the tau axis with d_a fixed until the
//                 rate improves by less than epsilon
//   qlearn      - tabular action-value learning; state = current grid cell,
//                 action = jump to any grid cell, reward = rate at the target
//                 cell
//   exhaustive  - full scan of the cross product (the oracle the other two
//                 are judged against)

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hapsim/eh_link.hpp"
#include "hapsim/geometry.hpp"

namespace hapsim {

// Everything that fixes the rate surface except (d_a, tau).
struct LinkScenario {
  ScenarioGeometry geometry;  // d_a_m is overwritten by the optimizers
  RadioParams radio;
  TimeSwitch time_switch;  // tau is overwritten by the optimizers
  NonlinearEhCircuit circuit;
  EhModel model = EhModel::linear;
  bool transmit_scaled = false;
};

// Rate at one candidate point.
double scenario_rate(const LinkScenario& s, double d_a_m, double tau);

struct GridSpec {
  std::vector<double> d_a_points_m;  // strictly increasing, within [0, d_z]
  std::vector<double> tau_points;    // strictly increasing, within (0, 1)

  // n_da evenly spaced offsets over [0, d_z] and tau_k = k / (n_tau + 1).
  static GridSpec uniform(double d_z_m, std::size_t n_da, std::size_t n_tau);

  std::size_t cells() const { return d_a_points_m.size() * tau_points.size(); }
};

void validate(const GridSpec& grid, const ScenarioGeometry& g);

struct IdfaConfig {
  int n_max = 50;            // maximum coordinate-descent rounds
  double epsilon_bps = 1.0;  // convergence tolerance on the rate
  std::size_t init_da_index = 0;
  std::size_t init_tau_index = 0;
};

struct QLearnConfig {
  double learning_rate = 0.1;  // in [0, 1]
  double discount = 0.9;       // in [0, 1]
  double exploration_initial = 1.0;
  double exploration_decay = 0.995;  // per episode, multiplicative
  double exploration_floor = 0.05;
  int episodes = 2000;
  int steps_per_episode = 50;
  std::uint64_t seed = 1;
};

enum class OptMethod { idfa, qlearn, exhaustive };

const char* to_string(OptMethod m);

struct OptimizationResult {
  double d_a_star_m = 0.0;
  double tau_star = 0.0;
  double rate_bps = 0.0;
  // Rate after each round (idfa) or mean reward per episode (qlearn).
  std::vector<double> trace;
  OptMethod method = OptMethod::exhaustive;
};

// Action-value storage for the exhaustive state/action design. The dense
// table would hold cells^2 entries (3 GB at a 201 x 99 grid), but a training
// run touches only as many entries as it makes updates, so rows are kept
// sparse with cached per-row maxima. Semantics match the dense table exactly:
// unvisited entries read as 0.
class QTable {
 public:
  explicit QTable(std::size_t n_cells);

  std::size_t cells() const { return rows_.size(); }
  double value(std::size_t s, std::size_t a) const;
  double row_max(std::size_t s) const { return row_max_[s]; }
  // Argmax over the row; unvisited rows fall back to action 0. Ties resolve
  // to the smallest action index regardless of insertion order.
  std::size_t greedy_action(std::size_t s) const;
  void update(std::size_t s, std::size_t a, double q);

  std::size_t entry_count() const { return entries_; }
  // Snapshot of all stored entries as (state, action, value), sorted.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> entries() const;

 private:
  void recompute_row(std::size_t s);

  std::vector<std::unordered_map<std::uint32_t, double>> rows_;
  std::vector<double> row_max_;
  std::vector<std::uint32_t> row_argmax_;
  std::size_t entries_ = 0;
};

OptimizationResult idfa(const LinkScenario& s, const GridSpec& grid,
                        const IdfaConfig& cfg);

struct QLearnOutcome {
  OptimizationResult result;
  QTable table;
};

QLearnOutcome qlearn_train(const LinkScenario& s, const GridSpec& grid,
                           const QLearnConfig& cfg);

// Full scan; ties broken by smaller tau, then smaller d_a. jobs == 0 picks
// the machine default.
OptimizationResult exhaustive_joint(const LinkScenario& s, const GridSpec& grid,
                                    unsigned jobs = 0);

}  // namespace hapsim
