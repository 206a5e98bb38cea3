#pragma once

// Energy-harvesting relay link: the regular platform harvests RF energy from
// the mother platform for a fraction tau of each block, then retransmits to
// the ground receiver with the harvested power for the remaining (1 - tau).
//
// Two harvester models are supported:
//   linear     - harvested power proportional to received RF power (factor eta)
//   nonlinear  - logistic rectifier saturation with ceiling m_sat, steepness
//                sigma and turn-on threshold rho

#include "hapsim/geometry.hpp"

namespace hapsim {

enum class EhModel { linear, nonlinear };

const char* to_string(EhModel m);

struct RadioParams {
  double p_t_w;            // mother platform transmit power
  double g_t;              // transmitter antenna gain, linear
  double g_r;              // receiver antenna gain, linear
  double f_hz;             // carrier frequency
  double eta;              // RF-to-DC conversion efficiency, [0, 1]
  double bandwidth_hz;     // B_W
  double temperature_k;    // absolute noise temperature
  double noise_figure;     // linear ratio
  double p_t_min_w = 0.0;  // minimum operational transmit power
};

void validate(const RadioParams& r);

struct NonlinearEhCircuit {
  // Defaults are representative rectifier values, not vendor measurements;
  // every config can override them.
  double m_sat_w = 0.024;      // saturation harvest power
  double sigma_per_w = 150.0;  // logistic steepness
  double rho_w = 0.014;        // turn-on threshold
};

void validate(const NonlinearEhCircuit& c);

struct TimeSwitch {
  double tau;             // harvesting fraction of the block, (0, 1)
  double block_period_s;  // T
};

void validate(const TimeSwitch& ts);

struct EhOutcome {
  EhModel model;
  double harvested_energy_j;
  double eh_transmit_power_w;
  double received_power_w;
  double snr;
  double rate_bps;
};

// Free-space amplitude of one hop: sqrt(g_t * g_r) * lambda / (4 pi d).
// d == 0 raises geometry_error.
double channel_amplitude(double g_t, double g_r, double lambda_m, double d_m);

// Energy collected over one block, linear model: tau * eta * P_t * g1^2 * T.
double harvest_linear(const TimeSwitch& ts, const RadioParams& radio, double g1);

// Rectifier output power for first-hop input x = P_t * g1^2:
//   m_sat * (1 - exp(-sigma x)) / (1 + exp(-sigma (x - rho)))
double logistic_delta(const RadioParams& radio, const NonlinearEhCircuit& circuit,
                      double g1);

// Energy collected over one block, nonlinear model: tau * delta * T.
double harvest_nonlinear(const TimeSwitch& ts, double delta_w);

// Relay transmit power from the harvested energy: E / ((1 - tau) T).
double eh_transmit_power(const TimeSwitch& ts, double harvested_j);

double noise_power(const RadioParams& radio);

// End-to-end received power at the ground receiver.
//
// linear:    eta * P_t * (g_t g_r beta / D)^2 * (lambda / 4 pi)^4,
//            beta^2 = tau / (1 - tau). Identical to composing harvest ->
//            relay power -> second hop; the closed form is kept as an
//            independent route and cross-checked in tests.
// nonlinear: beta^2 * delta * g_t g_r * (lambda / (4 pi d2))^2 with delta
//            evaluated on the first hop. With transmit_scaled set, the result
//            additionally carries a factor P_t (an alternate convention found
//            in some link analyses; dimensionally it reports W^2).
double received_power(EhModel model, const ScenarioGeometry& geom,
                      const RadioParams& radio, const TimeSwitch& ts,
                      const NonlinearEhCircuit* circuit = nullptr,
                      bool transmit_scaled = false);

// Shannon rate over the information slot: bandwidth_eff * log2(1 + snr).
double shannon_rate(double effective_bandwidth_hz, double snr);

// B_W (1 - tau) log2(1 + received_power / noise_power).
double data_rate(EhModel model, const ScenarioGeometry& geom,
                 const RadioParams& radio, const TimeSwitch& ts,
                 const NonlinearEhCircuit* circuit = nullptr,
                 bool transmit_scaled = false);

// Baseline without harvesting: the regular platform spends its own power p_t
// over the whole block, so the rate is B_W log2(1 + P_t h2^2 / P_N). tau does
// not appear.
double data_rate_no_eh(const ScenarioGeometry& geom, const RadioParams& radio);

// Full per-block outcome for one model variant (drives sweep output rows).
EhOutcome evaluate_link(EhModel model, const ScenarioGeometry& geom,
                        const RadioParams& radio, const TimeSwitch& ts,
                        const NonlinearEhCircuit* circuit = nullptr,
                        bool transmit_scaled = false);

// Internal building block shared by the public entry points and the grid
// optimizers: received power from explicit hop distances.
double received_power_from_hops(EhModel model, double d1_m, double d2_m,
                                const RadioParams& radio, const TimeSwitch& ts,
                                const NonlinearEhCircuit* circuit,
                                bool transmit_scaled);

}  // namespace hapsim
