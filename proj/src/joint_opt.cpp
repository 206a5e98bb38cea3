#include "hapsim/joint_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "hapsim/errors.hpp"
#include "hapsim/parallel.hpp"
#include "hapsim/rng.hpp"

namespace hapsim {

namespace {

constexpr std::size_t kMaxCells = 1000000;

// Rates for every grid cell, tau-major (cell = t * n_da + a). All three
// optimizers read the same table, so their results are comparable bit for
// bit.
struct RateGrid {
  std::size_t n_da = 0;
  std::size_t n_tau = 0;
  std::vector<double> rate;

  std::size_t cell(std::size_t t, std::size_t a) const { return t * n_da + a; }
};

RateGrid build_rate_grid(const LinkScenario& s, const GridSpec& grid,
                         unsigned jobs) {
  RateGrid rg;
  rg.n_da = grid.d_a_points_m.size();
  rg.n_tau = grid.tau_points.size();
  rg.rate.resize(rg.n_da * rg.n_tau);

  // Hop distances depend only on the offset.
  std::vector<HopDistances> hops(rg.n_da);
  for (std::size_t a = 0; a < rg.n_da; ++a) {
    ScenarioGeometry g = s.geometry;
    g.d_a_m = grid.d_a_points_m[a];
    hops[a] = hop_distances(g);
  }

  const double p_n = noise_power(s.radio);
  parallel_chunks(rg.n_tau, jobs, [&](std::size_t t0, std::size_t t1) {
    for (std::size_t t = t0; t < t1; ++t) {
      TimeSwitch ts{grid.tau_points[t], s.time_switch.block_period_s};
      const double bw_eff = s.radio.bandwidth_hz * (1.0 - ts.tau);
      for (std::size_t a = 0; a < rg.n_da; ++a) {
        const double p_r =
            received_power_from_hops(s.model, hops[a].d1_m, hops[a].d2_m, s.radio,
                                     ts, &s.circuit, s.transmit_scaled);
        rg.rate[rg.cell(t, a)] = shannon_rate(bw_eff, p_r / p_n);
      }
    }
  });
  return rg;
}

}  // namespace

const char* to_string(OptMethod m) {
  switch (m) {
    case OptMethod::idfa: return "idfa";
    case OptMethod::qlearn: return "qlearn";
    default: return "exhaustive";
  }
}

double scenario_rate(const LinkScenario& s, double d_a_m, double tau) {
  ScenarioGeometry g = s.geometry;
  g.d_a_m = d_a_m;
  TimeSwitch ts{tau, s.time_switch.block_period_s};
  return data_rate(s.model, g, s.radio, ts, &s.circuit, s.transmit_scaled);
}

GridSpec GridSpec::uniform(double d_z_m, std::size_t n_da, std::size_t n_tau) {
  GridSpec grid;
  grid.d_a_points_m.reserve(n_da);
  if (n_da == 1) {
    grid.d_a_points_m.push_back(d_z_m / 2.0);
  } else {
    const double step = d_z_m / static_cast<double>(n_da - 1);
    for (std::size_t i = 0; i < n_da; ++i) {
      grid.d_a_points_m.push_back(static_cast<double>(i) * step);
    }
    grid.d_a_points_m.back() = d_z_m;
  }
  grid.tau_points.reserve(n_tau);
  for (std::size_t j = 1; j <= n_tau; ++j) {
    grid.tau_points.push_back(static_cast<double>(j) /
                              static_cast<double>(n_tau + 1));
  }
  return grid;
}

void validate(const GridSpec& grid, const ScenarioGeometry& g) {
  if (grid.d_a_points_m.empty() || grid.tau_points.empty()) {
    throw invalid_input("grid axes must be non-empty");
  }
  double prev = -1.0;
  for (double v : grid.d_a_points_m) {
    check_finite(v, "d_a grid point");
    if (v < 0.0 || v > g.d_z_m) {
      throw invalid_input("d_a grid point outside [0, d_z]");
    }
    if (v <= prev) throw invalid_input("d_a grid points must be strictly increasing");
    prev = v;
  }
  prev = 0.0;
  for (double v : grid.tau_points) {
    check_open_unit_interval(v, "tau grid point");
    if (v <= prev) throw invalid_input("tau grid points must be strictly increasing");
    prev = v;
  }
}

OptimizationResult idfa(const LinkScenario& s, const GridSpec& grid,
                        const IdfaConfig& cfg) {
  validate(grid, s.geometry);
  if (cfg.n_max < 1) throw invalid_input("n_max must be at least 1");
  check_positive(cfg.epsilon_bps, "epsilon");
  const RateGrid rg = build_rate_grid(s, grid, 1);

  OptimizationResult out;
  out.method = OptMethod::idfa;

  std::size_t a = std::min(cfg.init_da_index, rg.n_da - 1);
  std::size_t t = std::min(cfg.init_tau_index, rg.n_tau - 1);

  if (rg.n_da == 1 && rg.n_tau == 1) {
    out.d_a_star_m = grid.d_a_points_m[0];
    out.tau_star = grid.tau_points[0];
    out.rate_bps = rg.rate[0];
    out.trace.push_back(out.rate_bps);
    return out;
  }

  double prev_rate = 0.0;
  for (int round = 0; round < cfg.n_max; ++round) {
    // Offset pass, tau fixed.
    for (std::size_t i = 0; i < rg.n_da; ++i) {
      if (rg.rate[rg.cell(t, i)] > rg.rate[rg.cell(t, a)]) a = i;
    }
    // Tau pass, offset fixed.
    for (std::size_t j = 0; j < rg.n_tau; ++j) {
      if (rg.rate[rg.cell(j, a)] > rg.rate[rg.cell(t, a)]) t = j;
    }
    const double r = rg.rate[rg.cell(t, a)];
    out.trace.push_back(r);
    if (r - prev_rate < cfg.epsilon_bps) break;
    prev_rate = r;
  }

  out.d_a_star_m = grid.d_a_points_m[a];
  out.tau_star = grid.tau_points[t];
  out.rate_bps = rg.rate[rg.cell(t, a)];
  return out;
}

QTable::QTable(std::size_t n_cells)
    : rows_(n_cells),
      row_max_(n_cells, 0.0),
      row_argmax_(n_cells, 0) {}

double QTable::value(std::size_t s, std::size_t a) const {
  const auto& row = rows_[s];
  const auto it = row.find(static_cast<std::uint32_t>(a));
  return it == row.end() ? 0.0 : it->second;
}

std::size_t QTable::greedy_action(std::size_t s) const {
  return rows_[s].empty() ? 0 : row_argmax_[s];
}

void QTable::recompute_row(std::size_t s) {
  // Smallest action index wins ties so the result never depends on hash
  // iteration order.
  double best = -std::numeric_limits<double>::infinity();
  std::uint32_t best_a = 0;
  for (const auto& [a, q] : rows_[s]) {
    if (q > best || (q == best && a < best_a)) {
      best = q;
      best_a = a;
    }
  }
  row_max_[s] = best;
  row_argmax_[s] = best_a;
}

void QTable::update(std::size_t s, std::size_t a, double q) {
  auto& row = rows_[s];
  const auto key = static_cast<std::uint32_t>(a);
  const auto it = row.find(key);
  const bool was_argmax = !row.empty() && row_argmax_[s] == key;
  if (it == row.end()) {
    row.emplace(key, q);
    ++entries_;
  } else {
    it->second = q;
  }
  if (row.size() == 1) {
    row_max_[s] = q;
    row_argmax_[s] = key;
  } else if (q > row_max_[s] || (q == row_max_[s] && key < row_argmax_[s])) {
    row_max_[s] = q;
    row_argmax_[s] = key;
  } else if (was_argmax && q < row_max_[s]) {
    recompute_row(s);
  }
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> QTable::entries()
    const {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> out;
  out.reserve(entries_);
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    for (const auto& [a, q] : rows_[s]) {
      out.emplace_back(static_cast<std::uint32_t>(s), a, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QLearnOutcome qlearn_train(const LinkScenario& s, const GridSpec& grid,
                           const QLearnConfig& cfg) {
  validate(grid, s.geometry);
  check_unit_interval(cfg.learning_rate, "learning rate");
  check_unit_interval(cfg.discount, "discount");
  check_unit_interval(cfg.exploration_floor, "exploration floor");
  if (cfg.episodes < 1 || cfg.steps_per_episode < 1) {
    throw invalid_input("episodes and steps per episode must be at least 1");
  }
  const std::size_t n_cells = grid.cells();
  if (n_cells > kMaxCells) {
    throw config_error(
        "state grid too large: the exhaustive action set squares the "
        "action-value table (limit 1e6 cells)");
  }

  const RateGrid rg = build_rate_grid(s, grid, 1);

  QLearnOutcome out{OptimizationResult{}, QTable(n_cells)};
  out.result.method = OptMethod::qlearn;
  out.result.trace.reserve(static_cast<std::size_t>(cfg.episodes));

  Rng rng(cfg.seed);
  double eps = cfg.exploration_initial;
  std::size_t best_visited = 0;
  double best_visited_rate = -1.0;

  for (int ep = 0; ep < cfg.episodes; ++ep) {
    std::size_t state = rng.next_index(n_cells);
    double reward_sum = 0.0;
    for (int step = 0; step < cfg.steps_per_episode; ++step) {
      const std::size_t action = (rng.next_double() < eps)
                                     ? rng.next_index(n_cells)
                                     : out.table.greedy_action(state);
      const double reward = rg.rate[action];
      reward_sum += reward;
      if (reward > best_visited_rate) {
        best_visited_rate = reward;
        best_visited = action;
      }
      const double old_q = out.table.value(state, action);
      const double target = reward + cfg.discount * out.table.row_max(action);
      out.table.update(state, action, old_q + cfg.learning_rate * (target - old_q));
      state = action;
    }
    out.result.trace.push_back(reward_sum / cfg.steps_per_episode);
    eps = std::max(cfg.exploration_floor, eps * cfg.exploration_decay);
  }

  // Recommended cell: the action behind the largest learned value, unless the
  // best cell seen during exploration outperforms it (it always does when the
  // learning rate is zero and the table never moves).
  std::size_t chosen = best_visited;
  double chosen_rate = best_visited_rate;
  double best_q = -std::numeric_limits<double>::infinity();
  std::uint64_t best_key = 0;
  for (const auto& [st, ac, q] : out.table.entries()) {
    const std::uint64_t key = (static_cast<std::uint64_t>(ac) << 32) | st;
    if (q > best_q || (q == best_q && key < best_key)) {
      best_q = q;
      best_key = key;
    }
  }
  if (out.table.entry_count() > 0) {
    const std::size_t greedy_cell = static_cast<std::size_t>(best_key >> 32);
    if (rg.rate[greedy_cell] > chosen_rate) {
      chosen = greedy_cell;
      chosen_rate = rg.rate[greedy_cell];
    }
  }

  out.result.d_a_star_m = grid.d_a_points_m[chosen % rg.n_da];
  out.result.tau_star = grid.tau_points[chosen / rg.n_da];
  out.result.rate_bps = chosen_rate;
  return out;
}

OptimizationResult exhaustive_joint(const LinkScenario& s, const GridSpec& grid,
                                    unsigned jobs) {
  validate(grid, s.geometry);
  if (grid.cells() > kMaxCells) {
    throw config_error("grid too large for an exhaustive scan (limit 1e6 points)");
  }
  const RateGrid rg = build_rate_grid(s, grid, jobs);

  // Per-chunk argmax over tau rows, then an ordered merge. Ties prefer the
  // smaller tau, then the smaller offset.
  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(jobs == 0 ? default_jobs() : jobs,
                                                  rg.n_tau));
  std::vector<std::pair<std::size_t, double>> chunk_best(
      rg.n_tau, {0, -std::numeric_limits<double>::infinity()});
  parallel_chunks(rg.n_tau, n_workers, [&](std::size_t t0, std::size_t t1) {
    for (std::size_t t = t0; t < t1; ++t) {
      std::size_t best_a = 0;
      double best_r = rg.rate[rg.cell(t, 0)];
      for (std::size_t a = 1; a < rg.n_da; ++a) {
        const double r = rg.rate[rg.cell(t, a)];
        if (r > best_r) {
          best_r = r;
          best_a = a;
        }
      }
      chunk_best[t] = {best_a, best_r};
    }
  });

  std::size_t best_t = 0;
  for (std::size_t t = 1; t < rg.n_tau; ++t) {
    if (chunk_best[t].second > chunk_best[best_t].second) best_t = t;
  }

  OptimizationResult out;
  out.method = OptMethod::exhaustive;
  out.d_a_star_m = grid.d_a_points_m[chunk_best[best_t].first];
  out.tau_star = grid.tau_points[best_t];
  out.rate_bps = chunk_best[best_t].second;
  return out;
}

}  // namespace hapsim
