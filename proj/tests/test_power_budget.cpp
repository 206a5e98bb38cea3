#include <doctest.h>

#include <cmath>

#include "expected_values.hpp"
#include "hapsim/eh_link.hpp"
#include "hapsim/errors.hpp"
#include "hapsim/power_budget.hpp"
#include "hapsim/rng.hpp"
#include "hapsim/units.hpp"

using namespace hapsim;

namespace {
const TimeSwitch kTs{0.1, 1.0};
const ScenarioGeometry kGeom{22000.0, 18000.0, 20000.0, 0.0};
const NonlinearEhCircuit kCircuit{};

RadioParams default_radio() {
  RadioParams r;
  r.p_t_w = 1.0;
  r.g_t = units::db_to_linear(43.2);
  r.g_r = units::db_to_linear(40.0);
  r.f_hz = 2.45e9;
  r.eta = 0.95;
  r.bandwidth_hz = 800e6;
  r.temperature_k = 300.0;
  r.noise_figure = units::db_to_linear(7.0);
  return r;
}

bool close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}
}  // namespace

TEST_CASE("borrow anchors") {
  // Surplus harvest: nothing borrowed.
  CHECK(borrow_energy(0.001, kTs, 1.0) == 0.0);
  // No harvest at all: the full requirement comes from inventory.
  const double p_req = 0.5;
  CHECK(borrow_energy(p_req, kTs, 0.0) == (1.0 - kTs.tau) * kTs.block_period_s * p_req);
}

TEST_CASE("borrow at the pinned operating point") {
  // p_req = -5 dBm, tau 0.1, T 1 s, linear harvest with a 10 dBm source at
  // zero offset.
  RadioParams radio = default_radio();
  radio.p_t_w = units::dbm_to_watts(10.0);
  const EhOutcome o = evaluate_link(EhModel::linear, kGeom, radio, kTs);
  CHECK(close(o.harvested_energy_j, expected::borrow_e_eh_j, 1e-13));

  const double p_req = units::dbm_to_watts(-5.0);
  CHECK(close(borrow_energy(p_req, kTs, o.harvested_energy_j),
              expected::borrow_e_a_j, 1e-13));
}

TEST_CASE("augmented power reduces to the requirement under deficit") {
  Rng rng(51);
  for (int i = 0; i < 1000; ++i) {
    const TimeSwitch ts{rng.next_range(0.01, 0.99), rng.next_range(0.1, 10.0)};
    const double p_req = rng.next_range(0.0, 10.0);
    const double e = rng.next_range(0.0, 10.0);
    const double borrowed = borrow_energy(p_req, ts, e);
    const double p_a = augmented_power(borrowed, e, ts);
    const double p_eh = e / ((1.0 - ts.tau) * ts.block_period_s);
    // Exactness: the augmented power is exactly the larger of requirement and
    // harvested power.
    CHECK(close(p_a, std::max(p_req, p_eh), 1e-12));
    CHECK(p_a >= p_req * (1.0 - 1e-12));
    // Complementarity: no borrowing and surplus never coexist.
    const double required = (1.0 - ts.tau) * ts.block_period_s * p_req;
    CHECK(borrowed * std::max(e - required, 0.0) == 0.0);
  }
}

TEST_CASE("borrowing any less breaks the requirement") {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const TimeSwitch ts{rng.next_range(0.01, 0.99), rng.next_range(0.1, 10.0)};
    const double p_req = rng.next_range(0.1, 10.0);
    const double required = (1.0 - ts.tau) * ts.block_period_s * p_req;
    const double e = rng.next_range(0.0, 0.99) * required;  // guaranteed deficit
    const double borrowed = borrow_energy(p_req, ts, e);
    REQUIRE(borrowed > 0.0);
    const double shaved = borrowed * (1.0 - 1e-6);
    CHECK(augmented_power(shaved, e, ts) < p_req);
  }
}

TEST_CASE("augmented power with zero borrow reduces to the relay power") {
  const double e = 0.75;
  CHECK(augmented_power(0.0, e, kTs) ==
        doctest::Approx(e / ((1.0 - kTs.tau) * kTs.block_period_s)));
  CHECK_THROWS_AS(augmented_power(0.0, 1.0, TimeSwitch{1.0, 1.0}), invalid_input);
}

TEST_CASE("mission totals") {
  // A flight exactly one harvest slot long returns one block's energy.
  const double e = 0.123;
  CHECK(mission_harvest(e, kTs, kTs.tau * kTs.block_period_s) ==
        doctest::Approx(e).epsilon(1e-14));
  // Linear in the flight time.
  CHECK(mission_harvest(e, kTs, 7200.0) ==
        doctest::Approx(2.0 * mission_harvest(e, kTs, 3600.0)));
  CHECK_THROWS_AS(mission_harvest(e, TimeSwitch{0.0, 1.0}, 100.0), invalid_input);

  // 24 h at the default operating point, both harvester models: the per-block
  // harvests come out of the link chain, the totals are pinned.
  const RadioParams radio = default_radio();
  const EhOutcome lin = evaluate_link(EhModel::linear, kGeom, radio, kTs);
  CHECK(close(mission_harvest(lin.harvested_energy_j, kTs, 86400.0),
              expected::mission_linear_24h_j, 1e-13));
  const EhOutcome nl = evaluate_link(EhModel::nonlinear, kGeom, radio, kTs, &kCircuit);
  CHECK(close(mission_harvest(nl.harvested_energy_j, kTs, 86400.0),
              expected::mission_nonlinear_24h_j, 1e-13));
}

TEST_CASE("budget bundle") {
  const double p_req = units::dbm_to_watts(-5.0);
  const PowerBudget b = evaluate_budget(p_req, kTs, expected::borrow_e_eh_j, 86400.0);
  CHECK(b.p_req_w == p_req);
  CHECK(close(b.e_borrowed_j, expected::borrow_e_a_j, 1e-13));
  CHECK(close(b.p_augmented_w, p_req, 1e-12));
  CHECK(b.e_surplus_j == 0.0);
  CHECK(close(b.e_mission_total_j,
              expected::borrow_e_eh_j * 86400.0 / (kTs.tau * kTs.block_period_s),
              1e-13));
}
