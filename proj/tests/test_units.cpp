#include <doctest.h>

#include <cmath>
#include <limits>

#include "expected_values.hpp"
#include "hapsim/errors.hpp"
#include "hapsim/rng.hpp"
#include "hapsim/units.hpp"

using namespace hapsim;

namespace {
bool close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}
}  // namespace

TEST_CASE("db_to_linear anchors") {
  CHECK(units::db_to_linear(0.0) == 1.0);
  CHECK(units::db_to_linear(10.0) == 10.0);
  CHECK(close(units::db_to_linear(43.2), expected::db_43_2_linear, 1e-14));
}

TEST_CASE("db_to_linear rejects non-finite input") {
  CHECK_THROWS_AS(units::db_to_linear(std::numeric_limits<double>::quiet_NaN()),
                  invalid_input);
  CHECK_THROWS_AS(units::db_to_linear(std::numeric_limits<double>::infinity()),
                  invalid_input);
}

TEST_CASE("db additivity maps to multiplication") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.next_range(-60.0, 60.0);
    const double b = rng.next_range(-60.0, 60.0);
    CHECK(close(units::db_to_linear(a + b),
                units::db_to_linear(a) * units::db_to_linear(b), 1e-12));
  }
}

TEST_CASE("dbm_to_watts anchors") {
  CHECK(units::dbm_to_watts(30.0) == 1.0);
  CHECK(units::dbm_to_watts(0.0) == 0.001);
  CHECK(close(units::dbm_to_watts(-5.0), expected::dbm_minus5_watts, 1e-14));
}

TEST_CASE("dbm is the db conversion over a milliwatt, exactly") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.next_range(-40.0, 60.0);
    CHECK(units::dbm_to_watts(x) == units::db_to_linear(x) / 1000.0);
  }
}

TEST_CASE("wavelength anchors and scaling") {
  CHECK(units::wavelength_m(units::speed_of_light_m_s) == 1.0);
  CHECK(close(units::wavelength_m(2.45e9), expected::wavelength_2450mhz_m, 1e-14));
  CHECK(close(units::wavelength_m(4.9e9), expected::wavelength_2450mhz_m / 2.0,
              1e-14));
  CHECK_THROWS_AS(units::wavelength_m(0.0), invalid_input);
  CHECK_THROWS_AS(units::wavelength_m(-1.0), invalid_input);
}

TEST_CASE("wavelength strictly decreasing in frequency") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const double f1 = rng.next_range(1e6, 1e11);
    const double f2 = f1 * (1.0 + rng.next_range(1e-6, 2.0));
    CHECK(units::wavelength_m(f2) < units::wavelength_m(f1));
  }
}

TEST_CASE("noise power anchors") {
  CHECK(units::noise_power_w(1.0, 300.0, 1.0) == 300.0 * units::boltzmann_j_per_k);
  const double base = units::noise_power_w(1e6, 290.0, 2.0);
  CHECK(units::noise_power_w(2e6, 290.0, 2.0) == 2.0 * base);
  CHECK(close(units::noise_power_w(800e6, 300.0, units::db_to_linear(7.0)),
              expected::noise_power_default_w, 1e-14));
  CHECK_THROWS_AS(units::noise_power_w(0.0, 300.0, 1.0), invalid_input);
  CHECK_THROWS_AS(units::noise_power_w(1e6, -2.0, 1.0), invalid_input);
}
