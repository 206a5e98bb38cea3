#include "hapsim/eh_link.hpp"

#include <cmath>
#include <numbers>

#include "hapsim/errors.hpp"
#include "hapsim/units.hpp"

namespace hapsim {

const char* to_string(EhModel m) {
  return m == EhModel::linear ? "linear" : "nonlinear";
}

void validate(const RadioParams& r) {
  check_non_negative(r.p_t_w, "p_t");
  check_non_negative(r.p_t_min_w, "p_t_min");
  if (r.p_t_w < r.p_t_min_w) {
    throw invalid_input("p_t must be at least p_t_min");
  }
  check_positive(r.g_t, "g_t");
  check_positive(r.g_r, "g_r");
  check_positive(r.f_hz, "frequency");
  check_unit_interval(r.eta, "eta");
  check_positive(r.bandwidth_hz, "bandwidth");
  check_positive(r.temperature_k, "temperature");
  check_positive(r.noise_figure, "noise figure");
}

void validate(const NonlinearEhCircuit& c) {
  check_positive(c.m_sat_w, "m_sat");
  check_positive(c.sigma_per_w, "sigma");
  check_positive(c.rho_w, "rho");
}

void validate(const TimeSwitch& ts) {
  check_open_unit_interval(ts.tau, "tau");
  check_positive(ts.block_period_s, "block period");
}

double channel_amplitude(double g_t, double g_r, double lambda_m, double d_m) {
  check_positive(g_t, "g_t");
  check_positive(g_r, "g_r");
  check_positive(lambda_m, "wavelength");
  check_finite(d_m, "distance");
  if (d_m <= 0.0) {
    throw geometry_error("hop distance must be positive");
  }
  return std::sqrt(g_t * g_r) * lambda_m / (4.0 * std::numbers::pi * d_m);
}

double harvest_linear(const TimeSwitch& ts, const RadioParams& radio, double g1) {
  return ts.tau * radio.eta * radio.p_t_w * g1 * g1 * ts.block_period_s;
}

double logistic_delta(const RadioParams& radio, const NonlinearEhCircuit& circuit,
                      double g1) {
  const double x = radio.p_t_w * g1 * g1;  // RF power into the rectifier
  const double num = 1.0 - std::exp(-circuit.sigma_per_w * x);
  const double den = 1.0 + std::exp(-circuit.sigma_per_w * (x - circuit.rho_w));
  return circuit.m_sat_w * num / den;
}

double harvest_nonlinear(const TimeSwitch& ts, double delta_w) {
  check_non_negative(delta_w, "delta");
  return ts.tau * delta_w * ts.block_period_s;
}

double eh_transmit_power(const TimeSwitch& ts, double harvested_j) {
  check_non_negative(harvested_j, "harvested energy");
  if (ts.tau >= 1.0) {
    throw invalid_input("tau must be below 1 to leave a transmission slot");
  }
  return harvested_j / ((1.0 - ts.tau) * ts.block_period_s);
}

double noise_power(const RadioParams& radio) {
  return units::noise_power_w(radio.bandwidth_hz, radio.temperature_k,
                              radio.noise_figure);
}

double received_power_from_hops(EhModel model, double d1_m, double d2_m,
                                const RadioParams& radio, const TimeSwitch& ts,
                                const NonlinearEhCircuit* circuit,
                                bool transmit_scaled) {
  const double lambda = units::wavelength_m(radio.f_hz);
  const double beta_sq = ts.tau / (1.0 - ts.tau);
  if (model == EhModel::linear) {
    // eta * P_t * (g_t g_r beta / (d1 d2))^2 * (lambda / 4 pi)^4, written as
    // the product of the two hop gains.
    const double over = lambda / (4.0 * std::numbers::pi);
    const double g1_sq = radio.g_t * radio.g_r * (over / d1_m) * (over / d1_m);
    const double h2_sq = radio.g_t * radio.g_r * (over / d2_m) * (over / d2_m);
    return radio.eta * beta_sq * radio.p_t_w * g1_sq * h2_sq;
  }
  if (circuit == nullptr) {
    throw invalid_input("nonlinear model requires rectifier circuit constants");
  }
  const double g1 = channel_amplitude(radio.g_t, radio.g_r, lambda, d1_m);
  const double h2 = channel_amplitude(radio.g_t, radio.g_r, lambda, d2_m);
  const double delta = logistic_delta(radio, *circuit, g1);
  const double p_r = beta_sq * delta * h2 * h2;
  return transmit_scaled ? p_r * radio.p_t_w : p_r;
}

double received_power(EhModel model, const ScenarioGeometry& geom,
                      const RadioParams& radio, const TimeSwitch& ts,
                      const NonlinearEhCircuit* circuit, bool transmit_scaled) {
  validate(radio);
  validate(ts);
  const HopDistances h = hop_distances(geom);
  return received_power_from_hops(model, h.d1_m, h.d2_m, radio, ts, circuit,
                                  transmit_scaled);
}

double shannon_rate(double effective_bandwidth_hz, double snr) {
  check_non_negative(snr, "snr");
  return effective_bandwidth_hz * std::log2(1.0 + snr);
}

double data_rate(EhModel model, const ScenarioGeometry& geom,
                 const RadioParams& radio, const TimeSwitch& ts,
                 const NonlinearEhCircuit* circuit, bool transmit_scaled) {
  const double p_r = received_power(model, geom, radio, ts, circuit, transmit_scaled);
  const double snr = p_r / noise_power(radio);
  return shannon_rate(radio.bandwidth_hz * (1.0 - ts.tau), snr);
}

double data_rate_no_eh(const ScenarioGeometry& geom, const RadioParams& radio) {
  validate(radio);
  const HopDistances h = hop_distances(geom);
  const double lambda = units::wavelength_m(radio.f_hz);
  const double h2 = channel_amplitude(radio.g_t, radio.g_r, lambda, h.d2_m);
  const double snr = radio.p_t_w * h2 * h2 / noise_power(radio);
  return shannon_rate(radio.bandwidth_hz, snr);
}

EhOutcome evaluate_link(EhModel model, const ScenarioGeometry& geom,
                        const RadioParams& radio, const TimeSwitch& ts,
                        const NonlinearEhCircuit* circuit, bool transmit_scaled) {
  validate(radio);
  validate(ts);
  const HopDistances h = hop_distances(geom);
  const double lambda = units::wavelength_m(radio.f_hz);
  const double g1 = channel_amplitude(radio.g_t, radio.g_r, lambda, h.d1_m);

  EhOutcome out;
  out.model = model;
  if (model == EhModel::linear) {
    out.harvested_energy_j = harvest_linear(ts, radio, g1);
  } else {
    if (circuit == nullptr) {
      throw invalid_input("nonlinear model requires rectifier circuit constants");
    }
    out.harvested_energy_j = harvest_nonlinear(ts, logistic_delta(radio, *circuit, g1));
  }
  out.eh_transmit_power_w = eh_transmit_power(ts, out.harvested_energy_j);
  out.received_power_w = received_power_from_hops(model, h.d1_m, h.d2_m, radio, ts,
                                                  circuit, transmit_scaled);
  out.snr = out.received_power_w / noise_power(radio);
  out.rate_bps = shannon_rate(radio.bandwidth_hz * (1.0 - ts.tau), out.snr);
  return out;
}

}  // namespace hapsim
