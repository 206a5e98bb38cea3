#pragma once

// Unit conversions and physical constants. Everything downstream computes in
// coherent linear SI units; dB/dBm/GHz/km show up only at the configuration
// boundary and in output formatting.

namespace hapsim::units {

// CODATA values.
inline constexpr double speed_of_light_m_s = 2.99792458e8;
inline constexpr double boltzmann_j_per_k = 1.380649e-23;

// 10^(x/10). Rejects non-finite input.
double db_to_linear(double db);
double linear_to_db(double ratio);

// dBm <-> W. dbm_to_watts(x) == db_to_linear(x) / 1000 by construction.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// c / f, f > 0.
double wavelength_m(double f_hz);

// Thermal noise power: kappa * temperature * bandwidth * noise figure,
// noise figure given as a linear ratio. All inputs must be positive.
double noise_power_w(double bandwidth_hz, double temperature_k,
                     double noise_figure_linear);

}  // namespace hapsim::units
