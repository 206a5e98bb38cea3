#include "hapsim/geometry.hpp"

#include <cmath>

#include "hapsim/errors.hpp"

namespace hapsim {

void validate(const ScenarioGeometry& g) {
  check_finite(g.d_ap1_m, "d_ap1");
  check_finite(g.d_ap2_m, "d_ap2");
  check_finite(g.d_z_m, "d_z");
  check_finite(g.d_a_m, "d_a");
  if (!(g.d_ap2_m > 0.0)) {
    throw geometry_error("regular platform altitude d_ap2 must be positive");
  }
  if (!(g.d_ap1_m > g.d_ap2_m)) {
    throw geometry_error(
        "mother platform altitude d_ap1 must exceed regular platform altitude d_ap2");
  }
  if (!(g.d_z_m > 0.0)) {
    throw geometry_error("horizontal span d_z must be positive");
  }
  if (!(g.d_ap1_m > g.d_z_m)) {
    throw geometry_error("mother platform altitude d_ap1 must exceed the span d_z");
  }
  if (g.d_a_m < 0.0 || g.d_a_m > g.d_z_m) {
    throw geometry_error("offset d_a must lie within [0, d_z]");
  }
}

HopDistances hop_distances_unchecked(const ScenarioGeometry& g) noexcept {
  const double gap = g.d_ap1_m - g.d_ap2_m;
  const double reach = g.d_z_m - g.d_a_m;
  return {std::sqrt(gap * gap + g.d_a_m * g.d_a_m),
          std::sqrt(g.d_ap2_m * g.d_ap2_m + reach * reach)};
}

HopDistances hop_distances(const ScenarioGeometry& g) {
  validate(g);
  return hop_distances_unchecked(g);
}

double equivalent_pathloss_distance(const ScenarioGeometry& g) {
  const HopDistances h = hop_distances(g);
  return h.d1_m * h.d2_m;
}

}  // namespace hapsim
