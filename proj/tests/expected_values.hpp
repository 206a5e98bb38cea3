// Generated by tests/oracle/expected_values.py -- do not edit by hand.
#pragma once

namespace expected {

inline constexpr double db_43_2_linear = 20892.961308540394;  // 10^(43.2/10)
inline constexpr double dbm_minus5_watts = 0.00031622776601683794;  // 10^((-5-30)/10)
inline constexpr double wavelength_2450mhz_m = 0.12236426857142857;  // c / 2.45 GHz
inline constexpr double noise_power_default_w = 1.6607127670086235e-11;  // kappa * 300 K * 800 MHz * 10^0.7
inline constexpr double d1_da0_m = 4000.0;  // offset 0: altitude gap
inline constexpr double d2_da0_m = 26907.24809414742;  // offset 0: sqrt(18^2+20^2) km
inline constexpr double pathloss_product_da8km_m2 = 193494185.9591652;  // d1*d2 at offset 8 km
inline constexpr double g1_amp_4km = 0.03518720435263845;  // sqrt(GtGr)*lambda/(4 pi 4km)
inline constexpr double harvest_linear_da8km_j = 2.352464765293243e-05;  // tau*eta*Pt*g1^2*T at offset 8 km, Pt=1 W
inline constexpr double p_r_linear_da10_tau04_w = 5.05344471179554e-09;
inline constexpr double p_r_nonlinear_da10_tau04_w = 2.1102082239301384e-09;
inline constexpr double rate_linear_da10_tau04_bps = 3961945976.8314185;
inline constexpr double grid_optimal_da_m = 448.0;  // 1 m grid argmin of D^2
inline constexpr double cubic_optimal_da_m = 448.49811086300895;  // exact real root of the D^2 derivative
inline constexpr double nl_endpoint_rate_da0_bps = 4748661201.522947;
inline constexpr double nl_endpoint_rate_dz_bps = 2243829507.4135537;
inline constexpr double nl_interior_400m_rate_bps = 4760442129.492812;  // beats both endpoints
inline constexpr double rate_linear_da0_tau01_bps = 5585110707.790069;
inline constexpr double rate_no_eh_da0_bps = 16521560699.284853;
inline constexpr double joint_linear_da_m = 400.0;
inline constexpr double joint_linear_tau = 0.17;
inline constexpr double joint_linear_rate_bps = 5746194538.015395;
inline constexpr double joint_nonlinear_da_m = 400.0;
inline constexpr double joint_nonlinear_tau = 0.19;
inline constexpr double joint_nonlinear_rate_bps = 4977898795.004838;
inline constexpr double table1_best_linear_bps = 4377211436.067384;  // best of the nine fixed pairs
inline constexpr double table1_best_nonlinear_bps = 3551097212.8787756;
inline constexpr double borrow_e_eh_j = 1.1762323826466216e-06;
inline constexpr double borrow_e_a_j = 0.0002834287570325075;
inline constexpr double mission_linear_24h_j = 101.6264778606681;
inline constexpr double mission_nonlinear_24h_j = 45.163445921267034;

}  // namespace expected
