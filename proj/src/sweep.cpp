#include "hapsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hapsim/errors.hpp"
#include "hapsim/parallel.hpp"
#include "hapsim/power_budget.hpp"
#include "hapsim/rng.hpp"
#include "hapsim/units.hpp"

namespace hapsim {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* const kSweepVariables[] = {"p_t_dbm", "d_ap2_km", "d_a_km", "d_1_km",
                                       "g_t_dbi", "g_r_dbi", "f_ghz", "tau"};

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> sweep_values(const SweepSpec& s) {
  // Inclusive range; the epsilon keeps the final point when (stop - start) is
  // an exact multiple of step up to rounding.
  const auto n = static_cast<std::size_t>(
      std::floor((s.stop - s.start) / s.step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(s.start + static_cast<double>(i) * s.step);
  }
  return out;
}

// Applies one sweep variable to the configuration-unit scenario block.
ScenarioSpec apply_variable(const ScenarioSpec& base, const std::string& variable,
                            double value) {
  ScenarioSpec s = base;
  if (variable == "p_t_dbm") {
    s.p_t_dbm = value;
  } else if (variable == "d_ap2_km") {
    s.d_ap2_km = value;
  } else if (variable == "d_a_km") {
    s.d_a_km = value;
  } else if (variable == "d_1_km") {
    // First-hop distance chosen directly; invert to the offset that realizes it.
    const double gap_km = s.d_ap1_km - s.d_ap2_km;
    const double sq = value * value - gap_km * gap_km;
    if (sq < 0.0) {
      throw geometry_error("d_1 below the altitude gap between the platforms");
    }
    s.d_a_km = std::sqrt(sq);
  } else if (variable == "g_t_dbi") {
    s.g_t_dbi = value;
  } else if (variable == "g_r_dbi") {
    s.g_r_dbi = value;
  } else if (variable == "f_ghz") {
    s.f_ghz = value;
  } else if (variable == "tau") {
    s.tau = value;
  } else {
    std::string names;
    for (const char* v : kSweepVariables) {
      if (!names.empty()) names += ", ";
      names += v;
    }
    throw config_error("unknown sweep variable '" + variable +
                       "' (valid: " + names + ")");
  }
  return s;
}

SweepRow evaluate_point(const ExperimentConfig& cfg, double value,
                        const std::string& model_name) {
  const SweepSpec& sw = *cfg.sweep;
  const ScenarioSpec spec = apply_variable(cfg.scenario, sw.variable, value);
  const ScenarioGeometry geom = make_geometry(spec);
  RadioParams radio = make_radio(spec);
  const TimeSwitch ts = make_time_switch(spec);
  const NonlinearEhCircuit circuit = make_circuit(cfg.circuit);

  SweepRow row;
  row.sweep_value = value;
  row.model = model_name;

  if (model_name == "no_eh") {
    row.harvested_energy_j = 0.0;
    row.p_eh_w = radio.p_t_w;  // spends its own full power over the whole block
    const HopDistances h = hop_distances(geom);
    const double h2 = channel_amplitude(radio.g_t, radio.g_r,
                                        units::wavelength_m(radio.f_hz), h.d2_m);
    row.p_r_w = radio.p_t_w * h2 * h2;
    row.snr = row.p_r_w / noise_power(radio);
    row.rate_bps = shannon_rate(radio.bandwidth_hz, row.snr);
  } else {
    if (sw.fair_energy) {
      // Spend the same per-block energy as the baseline: the source runs at
      // p_t / tau during the harvesting slot.
      radio.p_t_w /= ts.tau;
    }
    const EhModel model = model_from_name(model_name);
    const EhOutcome o = evaluate_link(model, geom, radio, ts, &circuit,
                                      cfg.circuit.transmit_scaled);
    row.harvested_energy_j = o.harvested_energy_j;
    row.p_eh_w = o.eh_transmit_power_w;
    row.p_r_w = o.received_power_w;
    row.snr = o.snr;
    row.rate_bps = o.rate_bps;
  }

  if (cfg.power) {
    row.p_req_w = units::dbm_to_watts(cfg.power->p_req_dbm);
    if (model_name != "no_eh") {
      const PowerBudget b =
          evaluate_budget(row.p_req_w, ts, row.harvested_energy_j, 0.0);
      row.e_borrowed_j = b.e_borrowed_j;
      row.p_augmented_w = b.p_augmented_w;
      row.e_surplus_j = b.e_surplus_j;
    }
  }
  return row;
}

GridSpec grid_from_method(const ExperimentConfig& cfg) {
  const MethodSpec& m = cfg.method;
  const double d_z_m = cfg.scenario.d_z_km * 1000.0;
  GridSpec grid = GridSpec::uniform(d_z_m, m.d_a_points, m.tau_points);
  if (!m.d_a_list_km.empty()) {
    grid.d_a_points_m.clear();
    for (double km : m.d_a_list_km) grid.d_a_points_m.push_back(km * 1000.0);
  }
  if (!m.tau_list.empty()) grid.tau_points = m.tau_list;
  return grid;
}

LinkScenario scenario_from_config(const ExperimentConfig& cfg,
                                  const std::string& model_name) {
  LinkScenario s;
  s.geometry = make_geometry(cfg.scenario);
  s.radio = make_radio(cfg.scenario);
  s.time_switch = make_time_switch(cfg.scenario);
  s.circuit = make_circuit(cfg.circuit);
  s.model = model_from_name(model_name);
  s.transmit_scaled = cfg.circuit.transmit_scaled;
  return s;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  if (!cfg.sweep) {
    throw config_error("sweep requires a [sweep] block");
  }
  const std::vector<double> values = sweep_values(*cfg.sweep);
  const std::vector<std::string>& models = cfg.sweep->models;

  std::vector<SweepRow> rows(values.size() * models.size());
  parallel_chunks(rows.size(), cfg.method.jobs, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const double value = values[i / models.size()];
      const std::string& model = models[i % models.size()];
      rows[i] = evaluate_point(cfg, value, model);
    }
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool budget_columns) {
  std::ostringstream os;
  os << "sweep_value,model,harvested_energy_J,p_eh_W,p_r_W,snr,rate_bps";
  if (budget_columns) os << ",p_req_W,e_borrowed_J,p_augmented_W,e_surplus_J";
  os << "\n";
  for (const SweepRow& r : rows) {
    os << csv_num(r.sweep_value) << "," << r.model << ","
       << csv_num(r.harvested_energy_j) << "," << csv_num(r.p_eh_w) << ","
       << csv_num(r.p_r_w) << "," << csv_num(r.snr) << "," << csv_num(r.rate_bps);
    if (budget_columns) {
      os << "," << csv_num(r.p_req_w) << "," << csv_num(r.e_borrowed_j) << ","
         << csv_num(r.p_augmented_w) << "," << csv_num(r.e_surplus_j);
    }
    os << "\n";
  }
  return os.str();
}

OptimizeArtifacts run_optimize(const ExperimentConfig& cfg) {
  const MethodSpec& m = cfg.method;
  const LinkScenario scenario = scenario_from_config(cfg, m.model);
  const GridSpec grid = grid_from_method(cfg);

  OptimizeArtifacts out;
  ordered_json hyper;
  if (m.name == "idfa") {
    IdfaConfig ic;
    ic.n_max = m.n_max;
    ic.epsilon_bps = m.epsilon_bps;
    out.result = idfa(scenario, grid, ic);
    hyper["n_max"] = ic.n_max;
    hyper["epsilon_bps"] = ic.epsilon_bps;
  } else if (m.name == "qlearn") {
    QLearnConfig qc;
    qc.learning_rate = m.learning_rate;
    qc.discount = m.discount;
    qc.exploration_initial = m.exploration_initial;
    qc.exploration_decay = m.exploration_decay;
    qc.exploration_floor = m.exploration_floor;
    qc.episodes = m.episodes;
    qc.steps_per_episode = m.steps_per_episode;
    qc.seed = m.seed;
    out.result = qlearn_train(scenario, grid, qc).result;
    hyper["learning_rate"] = qc.learning_rate;
    hyper["discount"] = qc.discount;
    hyper["exploration_initial"] = qc.exploration_initial;
    hyper["exploration_decay"] = qc.exploration_decay;
    hyper["exploration_floor"] = qc.exploration_floor;
    hyper["episodes"] = qc.episodes;
    hyper["steps_per_episode"] = qc.steps_per_episode;
  } else {
    out.result = exhaustive_joint(scenario, grid, m.jobs);
  }

  ordered_json j;
  j["method"] = m.name;
  j["model"] = m.model;
  j["transmit_scaled"] = cfg.circuit.transmit_scaled;
  j["grid"] = {{"d_a_points", grid.d_a_points_m.size()},
               {"tau_points", grid.tau_points.size()},
               {"d_a_min_m", grid.d_a_points_m.front()},
               {"d_a_max_m", grid.d_a_points_m.back()},
               {"tau_min", grid.tau_points.front()},
               {"tau_max", grid.tau_points.back()}};
  j["seed"] = m.seed;
  j["hyperparameters"] = hyper;
  j["result"] = {{"d_a_star_m", out.result.d_a_star_m},
                 {"tau_star", out.result.tau_star},
                 {"rate_bps", out.result.rate_bps}};
  j["trace_length"] = out.result.trace.size();

  // Optional random-selection baseline: for each listed offset, draw tau
  // uniformly and keep the best rate found.
  if (m.random_draws > 0 && !m.baseline_d_a_km.empty()) {
    Rng rng(m.seed ^ 0x9e3779b97f4a7c15ULL);
    double best_rate = -1.0;
    double best_da = 0.0;
    double best_tau = 0.0;
    for (double da_km : m.baseline_d_a_km) {
      for (int k = 0; k < m.random_draws; ++k) {
        double tau = rng.next_double();
        while (tau <= 0.0) tau = rng.next_double();
        const double r = scenario_rate(scenario, da_km * 1000.0, tau);
        if (r > best_rate) {
          best_rate = r;
          best_da = da_km * 1000.0;
          best_tau = tau;
        }
      }
    }
    j["baseline"] = {{"rate_bps", best_rate},
                     {"d_a_m", best_da},
                     {"tau", best_tau},
                     {"draws_per_offset", m.random_draws}};
  }

  out.summary_json = j.dump(2) + "\n";

  std::ostringstream trace;
  trace << "index,objective\n";
  for (std::size_t i = 0; i < out.result.trace.size(); ++i) {
    trace << i << "," << csv_num(out.result.trace[i]) << "\n";
  }
  out.trace_csv = trace.str();
  return out;
}

std::vector<PositionRow> run_position(const ExperimentConfig& cfg,
                                      double baseline_d_a_km) {
  double start = 14.0, stop = 19.0, step = 0.5;
  if (cfg.sweep) {
    if (cfg.sweep->variable != "d_ap2_km") {
      throw config_error("position expects the sweep variable d_ap2_km");
    }
    start = cfg.sweep->start;
    stop = cfg.sweep->stop;
    step = cfg.sweep->step;
  }
  SweepSpec local;
  local.start = start;
  local.stop = stop;
  local.step = step;
  const std::vector<double> values = sweep_values(local);

  std::vector<std::string> models = {"linear", "nonlinear"};
  if (cfg.sweep) {
    models.clear();
    for (const std::string& m : cfg.sweep->models) {
      if (m != "no_eh") models.push_back(m);
    }
    if (models.empty()) {
      throw config_error("position requires at least one harvesting model");
    }
  }

  std::vector<PositionRow> rows;
  rows.reserve(values.size() * models.size());
  for (double d_ap2_km : values) {
    ScenarioSpec spec = cfg.scenario;
    spec.d_ap2_km = d_ap2_km;
    const ScenarioGeometry geom = make_geometry(spec);
    const RadioParams radio = make_radio(spec);
    const TimeSwitch ts = make_time_switch(spec);
    const NonlinearEhCircuit circuit = make_circuit(cfg.circuit);

    ScenarioGeometry base_geom = geom;
    base_geom.d_a_m = baseline_d_a_km * 1000.0;

    for (const std::string& model : models) {
      PositionRow row;
      row.d_ap2_km = d_ap2_km;
      row.model = model;
      if (model == "linear") {
        const PositioningResult p = optimal_da_linear(geom);
        ScenarioGeometry opt_geom = geom;
        opt_geom.d_a_m = p.d_a_star_m;
        row.d_a_opt_m = p.d_a_star_m;
        row.rate_opt_bps = data_rate(EhModel::linear, opt_geom, radio, ts);
        row.rate_baseline_bps = data_rate(EhModel::linear, base_geom, radio, ts);
      } else {
        const PositioningResult p = optimal_da_nonlinear(
            geom, radio, ts, circuit, cfg.circuit.transmit_scaled);
        row.d_a_opt_m = p.d_a_star_m;
        row.rate_opt_bps = p.objective;
        row.rate_baseline_bps = data_rate(EhModel::nonlinear, base_geom, radio, ts,
                                          &circuit, cfg.circuit.transmit_scaled);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string position_csv(const std::vector<PositionRow>& rows) {
  std::ostringstream os;
  os << "d_ap2_km,model,d_a_opt_m,rate_opt_bps,rate_baseline_bps\n";
  for (const PositionRow& r : rows) {
    os << csv_num(r.d_ap2_km) << "," << r.model << "," << csv_num(r.d_a_opt_m)
       << "," << csv_num(r.rate_opt_bps) << "," << csv_num(r.rate_baseline_bps)
       << "\n";
  }
  return os.str();
}

std::vector<MissionRow> run_mission(const ExperimentConfig& cfg) {
  if (!cfg.power) {
    throw config_error("mission requires a [power] block with flight_times_h");
  }
  SweepSpec sw;
  if (cfg.sweep) {
    sw = *cfg.sweep;
  } else {
    sw.variable = "f_ghz";
    sw.start = 1.0;
    sw.stop = 6.0;
    sw.step = 0.5;
  }
  std::vector<std::string> models;
  for (const std::string& m : sw.models) {
    if (m == "no_eh") {
      throw config_error("mission totals are defined for harvesting models only");
    }
    models.push_back(m);
  }

  const std::vector<double> values = sweep_values(sw);
  std::vector<MissionRow> rows;
  rows.reserve(values.size() * models.size() * cfg.power->flight_times_h.size());
  for (double value : values) {
    const ScenarioSpec spec = apply_variable(cfg.scenario, sw.variable, value);
    const ScenarioGeometry geom = make_geometry(spec);
    const RadioParams radio = make_radio(spec);
    const TimeSwitch ts = make_time_switch(spec);
    const NonlinearEhCircuit circuit = make_circuit(cfg.circuit);
    for (const std::string& model : models) {
      const EhOutcome o = evaluate_link(model_from_name(model), geom, radio, ts,
                                        &circuit, cfg.circuit.transmit_scaled);
      for (double hours : cfg.power->flight_times_h) {
        MissionRow row;
        row.sweep_value = value;
        row.model = model;
        row.flight_time_h = hours;
        row.e_total_j = mission_harvest(o.harvested_energy_j, ts, hours * 3600.0);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string mission_csv(const std::vector<MissionRow>& rows) {
  std::ostringstream os;
  os << "sweep_value,model,flight_time_h,e_total_J\n";
  for (const MissionRow& r : rows) {
    os << csv_num(r.sweep_value) << "," << r.model << ","
       << csv_num(r.flight_time_h) << "," << csv_num(r.e_total_j) << "\n";
  }
  return os.str();
}

}  // namespace hapsim
