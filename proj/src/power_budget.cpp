#include "hapsim/power_budget.hpp"

#include <algorithm>

#include "hapsim/errors.hpp"

namespace hapsim {

double borrow_energy(double p_req_w, const TimeSwitch& ts, double e_harvested_j) {
  check_non_negative(p_req_w, "p_req");
  check_non_negative(e_harvested_j, "harvested energy");
  const double required_j = (1.0 - ts.tau) * ts.block_period_s * p_req_w;
  return std::max(required_j - e_harvested_j, 0.0);
}

double augmented_power(double e_borrowed_j, double e_harvested_j,
                       const TimeSwitch& ts) {
  check_non_negative(e_borrowed_j, "borrowed energy");
  check_non_negative(e_harvested_j, "harvested energy");
  if (ts.tau >= 1.0) {
    throw invalid_input("tau must be below 1 to leave a transmission slot");
  }
  return (e_borrowed_j + e_harvested_j) / ((1.0 - ts.tau) * ts.block_period_s);
}

double mission_harvest(double e_harvested_per_block_j, const TimeSwitch& ts,
                       double flight_time_s) {
  check_non_negative(e_harvested_per_block_j, "harvested energy");
  check_non_negative(flight_time_s, "flight time");
  if (ts.tau <= 0.0) {
    throw invalid_input("tau must be positive for a harvesting slot to exist");
  }
  return e_harvested_per_block_j * flight_time_s / (ts.tau * ts.block_period_s);
}

PowerBudget evaluate_budget(double p_req_w, const TimeSwitch& ts,
                            double e_harvested_j, double flight_time_s) {
  PowerBudget out;
  out.p_req_w = p_req_w;
  out.flight_time_s = flight_time_s;
  out.e_borrowed_j = borrow_energy(p_req_w, ts, e_harvested_j);
  out.p_augmented_w = augmented_power(out.e_borrowed_j, e_harvested_j, ts);
  const double required_j = (1.0 - ts.tau) * ts.block_period_s * p_req_w;
  out.e_surplus_j = std::max(e_harvested_j - required_j, 0.0);
  out.e_mission_total_j = mission_harvest(e_harvested_j, ts, flight_time_s);
  return out;
}

}  // namespace hapsim
