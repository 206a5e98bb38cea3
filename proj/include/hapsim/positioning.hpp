#pragma once

// Optimal horizontal offset of the regular platform.
//
// Linear harvester: the rate is maximized where the hop-distance product
// D = d1 d2 is minimized; the stationary points of D^2 are roots of a cubic
// with closed-form coefficients, solved in closed form and verified against
// an exhaustive grid.
//
// Nonlinear harvester: the first- and second-hop terms separate and pull the
// offset to opposite ends, so the candidates are the interval endpoints; both
// are evaluated and a coarse interior grid guards against cases where the
// endpoint heuristic is beaten.

#include "hapsim/eh_link.hpp"
#include "hapsim/geometry.hpp"

namespace hapsim {

struct CubicCoefficients {
  // Composite geometry terms.
  double lambda1;  // d_ap2^2
  double lambda2;  // (d_ap1 - d_ap2)^2
  double lambda3;  // -2 d_z
  double lambda4;  // lambda1 + lambda2 + d_z^2
  double lambda5;  // lambda2 * lambda3
  double lambda6;  // lambda1 * lambda2 + lambda2 * d_z^2
  double d_z_m;
  // Derivative cubic of D^2: a x^3 + b x^2 + c x + d.
  double a, b, c, d;
  // Intermediates of the legacy closed form (leading coefficient 3).
  double eps1, eps2, eps3;
};

CubicCoefficients pathloss_cubic(const ScenarioGeometry& g);

// D^2 in expanded form: (lambda2 + a^2)(lambda1 + (d_z - a)^2).
double pathloss_sq(const CubicCoefficients& cc, double d_a_m);

// Value of the derivative cubic at d_a.
double derivative_cubic(const CubicCoefficients& cc, double d_a_m);

// Single-root evaluation of the legacy closed form. NaN when its discriminant
// goes negative (three-real-root case, where the expression leaves the reals).
double closed_form_root(const CubicCoefficients& cc);

enum class PositioningMethod { cardano, endpoint, grid_oracle };

const char* to_string(PositioningMethod m);

struct PositioningResult {
  double d_a_star_m = 0.0;
  // Minimized D [m^2] for the path-loss objective, maximized rate [bps] for
  // the nonlinear-model objective.
  double objective = 0.0;
  PositioningMethod method = PositioningMethod::cardano;
  bool second_derivative_check = false;  // D^2(d* +/- 1 m) >= D^2(d*)
  bool used_closed_form = false;   // legacy closed form passed the residual test
  bool degenerate_geometry = false;  // no interior root; endpoints compared
  bool interior_warning = false;   // interior grid point beat both endpoints
};

// Linear model: minimize D over [0, d_z]. d_a of the input is ignored.
PositioningResult optimal_da_linear(const ScenarioGeometry& g);

// Nonlinear model: evaluate the rate at both endpoint candidates {0, d_z},
// return the maximizer (ties prefer 0, the higher-harvest end), and warn if a
// 101-point interior grid beats both endpoints by more than 0.1%.
PositioningResult optimal_da_nonlinear(const ScenarioGeometry& g,
                                       const RadioParams& radio,
                                       const TimeSwitch& ts,
                                       const NonlinearEhCircuit& circuit,
                                       bool transmit_scaled = false);

// Exhaustive scan over {0, step, 2 step, ..., d_z} minimizing D^2.
PositioningResult grid_min_pathloss(const ScenarioGeometry& g, double step_m);

// Same scan maximizing the nonlinear-model rate.
PositioningResult grid_max_rate_nonlinear(const ScenarioGeometry& g,
                                          const RadioParams& radio,
                                          const TimeSwitch& ts,
                                          const NonlinearEhCircuit& circuit,
                                          double step_m,
                                          bool transmit_scaled = false);

}  // namespace hapsim
