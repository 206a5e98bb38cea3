// hapsim: two-tier aerial-platform energy-harvesting link simulator.
//
// Subcommands map one-to-one onto the experiment drivers: sweep, position,
// idfa, qlearn, exhaustive, budget, mission. Every run also writes the fully
// resolved configuration next to its output so results are reproducible from
// the artifacts alone.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hapsim/config.hpp"
#include "hapsim/errors.hpp"
#include "hapsim/sweep.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOpts {
  std::string config_path;
  std::string output_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::optional<std::string> model;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-c,--config", o.config_path, "Configuration file (INI)");
  cmd->add_option("-o,--output", o.output_path, "Output path (overrides [output])");
  cmd->add_option("--seed", o.seed, "Random seed (overrides [method] seed)");
  cmd->add_option("--jobs", o.jobs, "Worker count, 0 = machine parallelism");
}

hapsim::ExperimentConfig resolve_config(const CommonOpts& o) {
  hapsim::ExperimentConfig cfg = o.config_path.empty()
                                     ? hapsim::default_config()
                                     : hapsim::load_config(o.config_path);
  if (!o.output_path.empty()) cfg.output.path = o.output_path;
  if (o.seed) cfg.method.seed = *o.seed;
  if (o.jobs) cfg.method.jobs = *o.jobs;
  if (o.model) cfg.method.model = *o.model;
  return cfg;
}

// Relative outputs land in $HAPSIM_OUTPUT_DIR when it is set.
fs::path resolve_output(const hapsim::ExperimentConfig& cfg,
                        const std::string& default_name) {
  fs::path p = cfg.output.path.empty() ? fs::path(default_name)
                                       : fs::path(cfg.output.path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("HAPSIM_OUTPUT_DIR")) {
      p = fs::path(dir) / p;
    }
  }
  return p;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw hapsim::config_error("cannot write output file '" + path.string() + "'");
  }
  out << content;
}

void echo_config(const fs::path& output, const hapsim::ExperimentConfig& cfg) {
  fs::path echo = output;
  echo.replace_filename(output.stem().string() + "_config.ini");
  write_file(echo, hapsim::write_config(cfg));
}

int run_sweep_cmd(const hapsim::ExperimentConfig& cfg, bool require_power,
                  const std::string& default_name) {
  hapsim::ExperimentConfig c = cfg;
  if (!c.sweep) c.sweep.emplace();  // default transmit-power sweep
  if (require_power && !c.power) {
    throw hapsim::config_error(
        "budget requires a [power] block with p_req_dbm");
  }
  const auto rows = hapsim::run_sweep(c);
  const fs::path out = resolve_output(c, default_name);
  write_file(out, hapsim::sweep_csv(rows, c.power.has_value()));
  echo_config(out, c);
  std::cout << out.string() << ": " << rows.size() << " rows\n";
  return kExitOk;
}

int run_optimize_cmd(hapsim::ExperimentConfig cfg, const std::string& method) {
  cfg.method.name = method;
  const auto artifacts = hapsim::run_optimize(cfg);
  const fs::path out = resolve_output(cfg, method + ".json");
  write_file(out, artifacts.summary_json);
  fs::path trace = out;
  trace.replace_filename(out.stem().string() + "_trace.csv");
  write_file(trace, artifacts.trace_csv);
  echo_config(out, cfg);
  std::cout << out.string() << ": rate " << artifacts.result.rate_bps
            << " bps at d_a " << artifacts.result.d_a_star_m << " m, tau "
            << artifacts.result.tau_star << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier aerial-platform energy-harvesting link simulator"};
  app.require_subcommand(1);

  CommonOpts sweep_opts, position_opts, idfa_opts, qlearn_opts, exhaustive_opts,
      budget_opts, mission_opts;
  double baseline_d_a_km = 0.0;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate the link across a swept parameter");
  add_common(sweep, sweep_opts);

  CLI::App* position = app.add_subcommand(
      "position", "Optimal offset vs a fixed baseline across altitudes");
  add_common(position, position_opts);
  position
      ->add_option("--baseline-d-a-km", baseline_d_a_km,
                   "Fixed offset of the unoptimized comparison, km")
      ->required();

  CLI::App* idfa_cmd =
      app.add_subcommand("idfa", "Coordinate-descent joint optimization");
  add_common(idfa_cmd, idfa_opts);
  idfa_cmd->add_option("--model", idfa_opts.model, "linear | nonlinear");

  CLI::App* qlearn_cmd =
      app.add_subcommand("qlearn", "Tabular action-value joint optimization");
  add_common(qlearn_cmd, qlearn_opts);
  qlearn_cmd->add_option("--model", qlearn_opts.model, "linear | nonlinear");

  CLI::App* exhaustive_cmd =
      app.add_subcommand("exhaustive", "Full grid scan (oracle)");
  add_common(exhaustive_cmd, exhaustive_opts);
  exhaustive_cmd->add_option("--model", exhaustive_opts.model,
                             "linear | nonlinear");

  CLI::App* budget = app.add_subcommand(
      "budget", "Sweep with inventory-borrowing power columns");
  add_common(budget, budget_opts);

  CLI::App* mission = app.add_subcommand(
      "mission", "Mission-total harvested energy across flight durations");
  add_common(mission, mission_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep_cmd(resolve_config(sweep_opts), false, "sweep.csv");
    }
    if (budget->parsed()) {
      hapsim::ExperimentConfig cfg = resolve_config(budget_opts);
      if (!cfg.power) cfg.power.emplace();
      return run_sweep_cmd(cfg, true, "budget.csv");
    }
    if (position->parsed()) {
      const hapsim::ExperimentConfig cfg = resolve_config(position_opts);
      const auto rows = hapsim::run_position(cfg, baseline_d_a_km);
      const fs::path out = resolve_output(cfg, "position.csv");
      write_file(out, hapsim::position_csv(rows));
      echo_config(out, cfg);
      std::cout << out.string() << ": " << rows.size() << " rows\n";
      return kExitOk;
    }
    if (idfa_cmd->parsed()) {
      return run_optimize_cmd(resolve_config(idfa_opts), "idfa");
    }
    if (qlearn_cmd->parsed()) {
      return run_optimize_cmd(resolve_config(qlearn_opts), "qlearn");
    }
    if (exhaustive_cmd->parsed()) {
      return run_optimize_cmd(resolve_config(exhaustive_opts), "exhaustive");
    }
    if (mission->parsed()) {
      const hapsim::ExperimentConfig cfg = resolve_config(mission_opts);
      const auto rows = hapsim::run_mission(cfg);
      const fs::path out = resolve_output(cfg, "mission.csv");
      write_file(out, hapsim::mission_csv(rows));
      echo_config(out, cfg);
      std::cout << out.string() << ": " << rows.size() << " rows\n";
      return kExitOk;
    }
  } catch (const hapsim::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const hapsim::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
