#include "hapsim/units.hpp"

#include <cmath>

#include "hapsim/errors.hpp"

namespace hapsim::units {

double db_to_linear(double db) {
  check_finite(db, "dB value");
  return std::pow(10.0, db / 10.0);
}

double linear_to_db(double ratio) {
  check_positive(ratio, "ratio");
  return 10.0 * std::log10(ratio);
}

double dbm_to_watts(double dbm) {
  // 10^((x - 30)/10) written as the dB conversion over a milliwatt so the two
  // stay identical bit for bit.
  return db_to_linear(dbm) / 1000.0;
}

double watts_to_dbm(double watts) {
  check_positive(watts, "power");
  return 10.0 * std::log10(watts) + 30.0;
}

double wavelength_m(double f_hz) {
  check_positive(f_hz, "frequency");
  return speed_of_light_m_s / f_hz;
}

double noise_power_w(double bandwidth_hz, double temperature_k,
                     double noise_figure_linear) {
  check_positive(bandwidth_hz, "bandwidth");
  check_positive(temperature_k, "temperature");
  check_positive(noise_figure_linear, "noise figure");
  return boltzmann_j_per_k * temperature_k * bandwidth_hz * noise_figure_linear;
}

}  // namespace hapsim::units
