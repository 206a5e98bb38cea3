#pragma once

// Inventory energy borrowing: when one block's harvest falls short of the
// required transmit power, the regular platform tops it up from onboard
// reserves with the minimum that still meets the requirement. Also the
// mission-total harvest over a flight.

#include "hapsim/eh_link.hpp"

namespace hapsim {

struct PowerBudget {
  double p_req_w = 0.0;           // required transmit power
  double e_borrowed_j = 0.0;      // inventory energy added this block
  double p_augmented_w = 0.0;     // resulting transmit power
  double e_surplus_j = 0.0;       // harvest beyond the requirement
  double e_mission_total_j = 0.0; // harvest over the whole flight
  double flight_time_s = 0.0;
};

// max{(1 - tau) T p_req - e_harvested, 0}: the least inventory energy that
// still reaches p_req.
double borrow_energy(double p_req_w, const TimeSwitch& ts, double e_harvested_j);

// (e_borrowed + e_harvested) / ((1 - tau) T).
double augmented_power(double e_borrowed_j, double e_harvested_j,
                       const TimeSwitch& ts);

// Total harvest across a flight of back-to-back identical blocks:
// e_per_block * flight_time / (tau T).
double mission_harvest(double e_harvested_per_block_j, const TimeSwitch& ts,
                       double flight_time_s);

PowerBudget evaluate_budget(double p_req_w, const TimeSwitch& ts,
                            double e_harvested_j, double flight_time_s);

}  // namespace hapsim
