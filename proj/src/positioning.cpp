#include "hapsim/positioning.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hapsim/cubic.hpp"
#include "hapsim/errors.hpp"

namespace hapsim {

const char* to_string(PositioningMethod m) {
  switch (m) {
    case PositioningMethod::cardano: return "cardano";
    case PositioningMethod::endpoint: return "endpoint";
    default: return "grid-oracle";
  }
}

namespace {

// Validates the parts of the geometry that positioning relies on; the offset
// itself is the unknown being solved for.
void validate_without_offset(const ScenarioGeometry& g) {
  ScenarioGeometry probe = g;
  probe.d_a_m = 0.0;
  validate(probe);
}

double rate_at_offset(const ScenarioGeometry& g, const RadioParams& radio,
                      const TimeSwitch& ts, const NonlinearEhCircuit& circuit,
                      bool transmit_scaled, double d_a_m) {
  ScenarioGeometry probe = g;
  probe.d_a_m = d_a_m;
  return data_rate(EhModel::nonlinear, probe, radio, ts, &circuit, transmit_scaled);
}

// Discrete local-minimum certificate at 1 m resolution.
bool second_derivative_ok(const CubicCoefficients& cc, double d_a_m) {
  const double here = pathloss_sq(cc, d_a_m);
  return pathloss_sq(cc, d_a_m - 1.0) >= here &&
         pathloss_sq(cc, d_a_m + 1.0) >= here;
}

double residual_scale(const CubicCoefficients& cc) {
  const double dz = cc.d_z_m;
  return std::max({std::fabs(cc.a) * dz * dz * dz, std::fabs(cc.b) * dz * dz,
                   std::fabs(cc.c) * dz, std::fabs(cc.d)});
}

}  // namespace

CubicCoefficients pathloss_cubic(const ScenarioGeometry& g) {
  CubicCoefficients cc{};
  const double gap = g.d_ap1_m - g.d_ap2_m;
  cc.lambda1 = g.d_ap2_m * g.d_ap2_m;
  cc.lambda2 = gap * gap;
  cc.lambda3 = -2.0 * g.d_z_m;
  cc.lambda4 = cc.lambda1 + cc.lambda2 + g.d_z_m * g.d_z_m;
  cc.lambda5 = cc.lambda2 * cc.lambda3;
  cc.lambda6 = cc.lambda1 * cc.lambda2 + cc.lambda2 * g.d_z_m * g.d_z_m;
  cc.d_z_m = g.d_z_m;

  cc.a = 4.0;
  cc.b = 3.0 * cc.lambda3;
  cc.c = 2.0 * cc.lambda4;
  cc.d = cc.lambda5;

  // Legacy closed-form intermediates, written against leading coefficient 3.
  const double la = 3.0;
  const double lb = la * cc.lambda3;
  const double lc = 2.0 * cc.lambda4;
  const double ld = cc.lambda5;
  cc.eps1 = -lb * lb * lb / (27.0 * la * la * la) + lb * lc / (6.0 * la * la) -
            ld / (2.0 * la);
  cc.eps2 = lc / (3.0 * la) - lb * lb / (9.0 * la * la);
  cc.eps3 = lb / (3.0 * la);
  return cc;
}

double pathloss_sq(const CubicCoefficients& cc, double d_a_m) {
  const double reach = cc.d_z_m - d_a_m;
  return (cc.lambda2 + d_a_m * d_a_m) * (cc.lambda1 + reach * reach);
}

double derivative_cubic(const CubicCoefficients& cc, double d_a_m) {
  return ((cc.a * d_a_m + cc.b) * d_a_m + cc.c) * d_a_m + cc.d;
}

double closed_form_root(const CubicCoefficients& cc) {
  const double disc = cc.eps1 * cc.eps1 + cc.eps2 * cc.eps2 * cc.eps2;
  if (disc < 0.0) {
    return std::nan("");
  }
  const double s = std::sqrt(disc);
  return std::cbrt(cc.eps1 + s) + std::cbrt(cc.eps1 - s) - cc.eps3;
}

PositioningResult optimal_da_linear(const ScenarioGeometry& g) {
  validate_without_offset(g);
  const CubicCoefficients cc = pathloss_cubic(g);
  const double scale = residual_scale(cc);
  const double tol = 1e-6 * scale;

  // Interior candidates: stationary points of D^2 inside [0, d_z].
  const CubicRoots roots = solve_cubic(cc.a, cc.b, cc.c, cc.d);
  std::vector<double> interior;
  for (int i = 0; i < roots.count; ++i) {
    const double r = roots.root[i];
    if (r >= 0.0 && r <= cc.d_z_m && std::fabs(derivative_cubic(cc, r)) < tol) {
      interior.push_back(r);
    }
  }

  // Legacy single-root expression, admitted only when it actually solves the
  // derivative cubic to the same residual tolerance.
  const double legacy = closed_form_root(cc);
  const bool legacy_ok = std::isfinite(legacy) && legacy >= 0.0 &&
                         legacy <= cc.d_z_m &&
                         std::fabs(derivative_cubic(cc, legacy)) < tol;

  PositioningResult out;
  out.degenerate_geometry = interior.empty() && !legacy_ok;

  double best = 0.0;
  double best_val = pathloss_sq(cc, 0.0);
  bool best_is_interior = false;
  auto consider = [&](double cand, bool is_interior) {
    const double v = pathloss_sq(cc, cand);
    if (v < best_val) {
      best = cand;
      best_val = v;
      best_is_interior = is_interior;
    }
  };
  consider(cc.d_z_m, false);
  for (double r : interior) consider(r, true);
  bool legacy_won = false;
  if (legacy_ok) {
    const double v = pathloss_sq(cc, legacy);
    // Prefer the robust root when both land on the same minimum.
    if (v < best_val && (interior.empty() || v < best_val * (1.0 - 1e-12))) {
      best = legacy;
      best_val = v;
      best_is_interior = true;
      legacy_won = true;
    }
  }

  out.d_a_star_m = best;
  out.objective = std::sqrt(best_val);  // minimized hop-distance product
  out.method = best_is_interior ? PositioningMethod::cardano
                                : PositioningMethod::endpoint;
  out.used_closed_form = legacy_won;
  out.second_derivative_check = second_derivative_ok(cc, best);
  return out;
}

PositioningResult optimal_da_nonlinear(const ScenarioGeometry& g,
                                       const RadioParams& radio,
                                       const TimeSwitch& ts,
                                       const NonlinearEhCircuit& circuit,
                                       bool transmit_scaled) {
  validate_without_offset(g);
  validate(radio);
  validate(ts);
  validate(circuit);

  const double r0 = rate_at_offset(g, radio, ts, circuit, transmit_scaled, 0.0);
  const double rz = rate_at_offset(g, radio, ts, circuit, transmit_scaled, g.d_z_m);

  PositioningResult out;
  out.method = PositioningMethod::endpoint;
  if (rz > r0) {
    out.d_a_star_m = g.d_z_m;
    out.objective = rz;
  } else {
    // Ties prefer the offset closest to the mother platform.
    out.d_a_star_m = 0.0;
    out.objective = r0;
  }

  // Safety oracle: a coarse interior scan; the endpoint rule is a heuristic
  // and interior maxima do occur.
  const double best_endpoint = std::max(r0, rz);
  for (int i = 1; i < 100; ++i) {
    const double d_a = g.d_z_m * static_cast<double>(i) / 100.0;
    const double r = rate_at_offset(g, radio, ts, circuit, transmit_scaled, d_a);
    if (r > best_endpoint * 1.001) {
      out.interior_warning = true;
      break;
    }
  }
  return out;
}

PositioningResult grid_min_pathloss(const ScenarioGeometry& g, double step_m) {
  validate_without_offset(g);
  check_positive(step_m, "grid step");
  const CubicCoefficients cc = pathloss_cubic(g);

  double best = 0.0;
  double best_val = pathloss_sq(cc, 0.0);
  for (std::size_t i = 1;; ++i) {
    double d_a = static_cast<double>(i) * step_m;
    if (d_a >= g.d_z_m) d_a = g.d_z_m;
    const double v = pathloss_sq(cc, d_a);
    if (v < best_val) {
      best = d_a;
      best_val = v;
    }
    if (d_a >= g.d_z_m) break;
  }

  PositioningResult out;
  out.d_a_star_m = best;
  out.objective = std::sqrt(best_val);
  out.method = PositioningMethod::grid_oracle;
  out.second_derivative_check = second_derivative_ok(cc, best);
  return out;
}

PositioningResult grid_max_rate_nonlinear(const ScenarioGeometry& g,
                                          const RadioParams& radio,
                                          const TimeSwitch& ts,
                                          const NonlinearEhCircuit& circuit,
                                          double step_m, bool transmit_scaled) {
  validate_without_offset(g);
  validate(radio);
  validate(ts);
  validate(circuit);
  check_positive(step_m, "grid step");

  double best = 0.0;
  double best_val = rate_at_offset(g, radio, ts, circuit, transmit_scaled, 0.0);
  for (std::size_t i = 1;; ++i) {
    double d_a = static_cast<double>(i) * step_m;
    if (d_a >= g.d_z_m) d_a = g.d_z_m;
    const double v = rate_at_offset(g, radio, ts, circuit, transmit_scaled, d_a);
    if (v > best_val) {
      best = d_a;
      best_val = v;
    }
    if (d_a >= g.d_z_m) break;
  }

  PositioningResult out;
  out.d_a_star_m = best;
  out.objective = best_val;
  out.method = PositioningMethod::grid_oracle;
  return out;
}

}  // namespace hapsim
