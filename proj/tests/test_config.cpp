#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "hapsim/config.hpp"
#include "hapsim/errors.hpp"
#include "hapsim/sweep.hpp"
#include "hapsim/units.hpp"

using namespace hapsim;

TEST_CASE("empty text resolves to the full default parameter set") {
  const ExperimentConfig cfg = parse_config("", "<empty>");
  CHECK(cfg == default_config());
  CHECK(cfg.scenario.d_ap1_km == 22.0);
  CHECK(cfg.scenario.d_ap2_km == 18.0);
  CHECK(cfg.scenario.d_z_km == 20.0);
  CHECK(cfg.scenario.g_t_dbi == 43.2);
  CHECK(cfg.scenario.g_r_dbi == 40.0);
  CHECK(cfg.scenario.f_ghz == 2.45);
  CHECK(cfg.scenario.eta == 0.95);
  CHECK(cfg.scenario.tau == 0.1);
  CHECK(cfg.scenario.t_s == 1.0);
  CHECK(cfg.scenario.p_t_dbm == 30.0);
  CHECK(cfg.scenario.bandwidth_mhz == 800.0);
  CHECK(cfg.scenario.temperature_k == 300.0);
  CHECK(cfg.scenario.noise_figure_db == 7.0);
  CHECK_FALSE(cfg.sweep.has_value());
  CHECK_FALSE(cfg.power.has_value());
}

TEST_CASE("materialized defaults are coherent SI quantities") {
  const ExperimentConfig cfg = default_config();
  const ScenarioGeometry g = make_geometry(cfg.scenario);
  CHECK(g.d_ap1_m == 22000.0);
  CHECK(g.d_a_m == 0.0);
  const RadioParams r = make_radio(cfg.scenario);
  CHECK(r.p_t_w == 1.0);
  CHECK(r.f_hz == 2.45e9);
  CHECK(r.bandwidth_hz == 800e6);
  CHECK(r.noise_figure == units::db_to_linear(7.0));
  const NonlinearEhCircuit c = make_circuit(cfg.circuit);
  CHECK(c.m_sat_w == 0.024);
  CHECK(c.rho_w == 0.014);
}

TEST_CASE("field violations name the field and constraint") {
  CHECK_THROWS_WITH_AS(
      parse_config("[scenario]\ntau = 1.2\n", "cfg"),
      "cfg: tau must lie strictly between 0 and 1", config_error);
  CHECK_THROWS_AS(parse_config("[scenario]\nd_ap2_km = 23\n", "cfg"),
                  config_error);
  try {
    parse_config("[scenario]\nd_ap2_km = 23\n", "cfg");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("d_ap1") != std::string::npos);
  }
}

TEST_CASE("unknown keys and sections are rejected with positions") {
  try {
    parse_config("[scenario]\nbogus_key = 1\n", "cfg");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("cfg:2:1") != std::string::npos);
    CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("[mystery]\nx = 1\n", "cfg"), config_error);
  try {
    parse_config("[scenario]\ntau = fast\n", "cfg");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find("cfg:2:7") != std::string::npos);
  }
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
  const ExperimentConfig cfg = parse_config(
      "# leading comment\n"
      "\n"
      "[scenario]\n"
      "  tau   =   0.25  \n"
      "; another comment\n"
      "[method]\n"
      "name = idfa\n",
      "cfg");
  CHECK(cfg.scenario.tau == 0.25);
  CHECK(cfg.method.name == "idfa");
}

TEST_CASE("round trip is field-for-field exact") {
  ExperimentConfig cfg = default_config();
  cfg.scenario.tau = 0.3141592653589793;
  cfg.scenario.d_a_km = 0.4483;
  cfg.scenario.p_t_min_dbm = -3.25;
  cfg.sweep.emplace();
  cfg.sweep->variable = "p_t_dbm";
  cfg.sweep->models = {"linear", "no_eh"};
  cfg.sweep->fair_energy = true;
  cfg.method.name = "qlearn";
  cfg.method.model = "nonlinear";
  cfg.method.seed = 987654321098765ULL;
  cfg.method.d_a_list_km = {8.0, 10.0, 15.0};
  cfg.method.tau_list = {0.1, 0.4, 0.9};
  cfg.method.baseline_d_a_km = {8.0, 10.0};
  cfg.method.random_draws = 10;
  cfg.power.emplace();
  cfg.power->p_req_dbm = -5.0;
  cfg.power->flight_times_h = {12.0, 24.0, 48.5};
  cfg.output.path = "out/results.csv";

  const std::string text = write_config(cfg);
  const ExperimentConfig back = parse_config(text, "<roundtrip>");
  CHECK(back == cfg);
}

TEST_CASE("sweep rejects unknown variables, listing the valid ones") {
  ExperimentConfig cfg = default_config();
  cfg.sweep.emplace();
  cfg.sweep->variable = "warp_factor";
  try {
    run_sweep(cfg);
    FAIL("expected config_error");
  } catch (const config_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("warp_factor") != std::string::npos);
    CHECK(msg.find("p_t_dbm") != std::string::npos);
    CHECK(msg.find("d_ap2_km") != std::string::npos);
  }
}

TEST_CASE("transmit-power sweep row inventory") {
  ExperimentConfig cfg = default_config();
  cfg.sweep.emplace();  // defaults: p_t_dbm 0..50 step 1, all three variants
  const auto rows = run_sweep(cfg);
  CHECK(rows.size() == 153);  // 51 points x 3 variants
  // Deterministic ordering: sweep value major, then model order.
  CHECK(rows[0].sweep_value == 0.0);
  CHECK(rows[0].model == "linear");
  CHECK(rows[1].model == "nonlinear");
  CHECK(rows[2].model == "no_eh");
  CHECK(rows[3].sweep_value == 1.0);

  const std::string csv = sweep_csv(rows, false);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "sweep_value,model,harvested_energy_J,p_eh_W,p_r_W,snr,rate_bps");
}

TEST_CASE("csv numbers survive a parse round trip bitwise") {
  ExperimentConfig cfg = default_config();
  cfg.sweep.emplace();
  cfg.sweep->stop = 5.0;
  const auto rows = run_sweep(cfg);
  const std::string csv = sweep_csv(rows, false);

  // Reparse every numeric field with strtod and compare exactly.
  std::size_t pos = csv.find('\n') + 1;
  for (const auto& row : rows) {
    const std::size_t end = csv.find('\n', pos);
    const std::string line = csv.substr(pos, end - pos);
    pos = end + 1;
    double vals[6] = {};
    char model[32] = {};
    const int n = std::sscanf(line.c_str(), "%lf,%31[^,],%lf,%lf,%lf,%lf,%lf",
                              &vals[0], model, &vals[1], &vals[2], &vals[3],
                              &vals[4], &vals[5]);
    REQUIRE(n == 7);
    CHECK(vals[0] == row.sweep_value);
    CHECK(vals[1] == row.harvested_energy_j);
    CHECK(vals[2] == row.p_eh_w);
    CHECK(vals[3] == row.p_r_w);
    CHECK(vals[4] == row.snr);
    CHECK(vals[5] == row.rate_bps);
  }
}

TEST_CASE("fair-energy sweeps equalize per-block energy") {
  ExperimentConfig cfg = default_config();
  cfg.sweep.emplace();
  cfg.sweep->start = 30.0;
  cfg.sweep->stop = 30.0;
  cfg.sweep->models = {"linear"};
  const auto plain = run_sweep(cfg);
  cfg.sweep->fair_energy = true;
  const auto fair = run_sweep(cfg);
  REQUIRE(plain.size() == 1);
  REQUIRE(fair.size() == 1);
  // The source runs at p_t / tau during harvesting, so with tau = 0.1 the
  // harvested energy grows tenfold.
  CHECK(fair[0].harvested_energy_j ==
        doctest::Approx(10.0 * plain[0].harvested_energy_j).epsilon(1e-12));
}

TEST_CASE("geometry sweeps can drive the first hop directly") {
  ExperimentConfig cfg = default_config();
  cfg.sweep.emplace();
  cfg.sweep->variable = "d_1_km";
  cfg.sweep->start = 5.0;
  cfg.sweep->stop = 10.0;
  cfg.sweep->step = 1.0;
  cfg.sweep->models = {"linear"};
  const auto rows = run_sweep(cfg);
  CHECK(rows.size() == 6);
  // Harvest falls as the first hop stretches.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].harvested_energy_j < rows[i - 1].harvested_energy_j);
  }

  cfg.sweep->start = 1.0;  // below the 4 km altitude gap
  cfg.sweep->stop = 1.0;
  CHECK_THROWS_AS(run_sweep(cfg), geometry_error);
}

TEST_CASE("optimizer driver with explicit grids and a random-selection baseline") {
  ExperimentConfig cfg = default_config();
  cfg.method.name = "exhaustive";
  cfg.method.d_a_list_km = {8.0, 10.0, 15.0};
  cfg.method.tau_list = {0.1, 0.4, 0.9};
  cfg.method.random_draws = 10;
  cfg.method.baseline_d_a_km = {8.0, 10.0, 15.0};
  cfg.method.seed = 5;

  const OptimizeArtifacts a = run_optimize(cfg);
  // Best of the nine fixed pairs sits at (8 km, 0.1).
  CHECK(a.result.d_a_star_m == 8000.0);
  CHECK(a.result.tau_star == 0.1);
  CHECK(a.summary_json.find("\"baseline\"") != std::string::npos);
  CHECK(a.summary_json.find("\"draws_per_offset\": 10") != std::string::npos);

  // Reproducible under the seed.
  const OptimizeArtifacts b = run_optimize(cfg);
  CHECK(a.summary_json == b.summary_json);
  CHECK(a.trace_csv == b.trace_csv);
}

TEST_CASE("budget columns appear with the power block") {
  ExperimentConfig cfg = default_config();
  cfg.sweep.emplace();
  cfg.sweep->start = 10.0;
  cfg.sweep->stop = 12.0;
  cfg.sweep->models = {"linear"};
  cfg.power.emplace();
  cfg.power->p_req_dbm = -5.0;
  const auto rows = run_sweep(cfg);
  const std::string csv = sweep_csv(rows, true);
  CHECK(csv.find("p_req_W,e_borrowed_J,p_augmented_W,e_surplus_J") !=
        std::string::npos);
  for (const auto& r : rows) {
    CHECK(r.p_req_w == units::dbm_to_watts(-5.0));
    CHECK(r.p_augmented_w >= r.p_req_w * (1.0 - 1e-12));
  }
}
