#pragma once

// Two-tier deployment geometry: a mother platform at altitude d_ap1, a
// regular platform at altitude d_ap2 offset horizontally by d_a, and a ground
// receiver at horizontal span d_z from the mother platform. All nodes lie in
// one vertical plane.

namespace hapsim {

struct ScenarioGeometry {
  double d_ap1_m;  // mother platform altitude
  double d_ap2_m;  // regular platform altitude
  double d_z_m;    // total horizontal span, mother -> receiver
  double d_a_m;    // horizontal offset, mother -> regular platform
};

// Throws geometry_error naming the violated constraint. d_a_m may be 0 or
// d_z_m: both endpoints are legitimate analysis points even though deployed
// scenarios keep the offset strictly positive.
void validate(const ScenarioGeometry& g);

struct HopDistances {
  double d1_m;  // mother -> regular platform
  double d2_m;  // regular platform -> ground receiver
};

HopDistances hop_distances(const ScenarioGeometry& g);

// Same computation without constraint validation. Only for analysis/oracle
// use on deliberately degenerate inputs.
HopDistances hop_distances_unchecked(const ScenarioGeometry& g) noexcept;

// Equivalent path-loss distance D = d1 * d2 [m^2].
double equivalent_pathloss_distance(const ScenarioGeometry& g);

}  // namespace hapsim
