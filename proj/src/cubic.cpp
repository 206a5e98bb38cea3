#include "hapsim/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hapsim {

namespace {

void push_root(CubicRoots& out, double r) {
  out.root[out.count++] = r;
}

CubicRoots solve_quadratic(double a, double b, double c) {
  CubicRoots out;
  if (a == 0.0) {
    if (b != 0.0) push_root(out, -c / b);
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return out;
  // Citardauq form avoids cancellation on the small root.
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  push_root(out, q / a);
  if (q != 0.0) {
    push_root(out, c / q);
  } else {
    push_root(out, 0.0);
  }
  std::sort(out.root, out.root + out.count);
  return out;
}

}  // namespace

CubicRoots solve_cubic(double a, double b, double c, double d) {
  // Treat a leading coefficient that is negligible against the others as a
  // quadratic; exact zero included.
  const double mag = std::max({std::fabs(b), std::fabs(c), std::fabs(d)});
  if (std::fabs(a) <= mag * 1e-300 || a == 0.0) {
    return solve_quadratic(b, c, d);
  }

  // Normalize to x^3 + p2 x^2 + p1 x + p0, then depress with x = t - p2/3.
  const double p2 = b / a;
  const double p1 = c / a;
  const double p0 = d / a;
  const double shift = p2 / 3.0;
  const double q = p1 - p2 * p2 / 3.0;                              // t coefficient
  const double r = 2.0 * p2 * p2 * p2 / 27.0 - p2 * p1 / 3.0 + p0;  // constant

  CubicRoots out;
  const double half_r = r / 2.0;
  const double third_q = q / 3.0;
  const double disc = half_r * half_r + third_q * third_q * third_q;

  if (disc > 0.0) {
    // One real root (Cardano).
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-half_r + s);
    const double v = std::cbrt(-half_r - s);
    push_root(out, u + v - shift);
  } else if (disc == 0.0) {
    const double u = std::cbrt(-half_r);
    push_root(out, 2.0 * u - shift);
    if (u != 0.0) push_root(out, -u - shift);
  } else {
    // Three real roots: trigonometric branch (q < 0 here).
    const double m = 2.0 * std::sqrt(-third_q);
    double cosarg = 3.0 * r / (q * m);
    cosarg = std::clamp(cosarg, -1.0, 1.0);
    const double theta = std::acos(cosarg) / 3.0;
    constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
    for (int k = 0; k < 3; ++k) {
      push_root(out, m * std::cos(theta - k * two_thirds_pi) - shift);
    }
  }
  std::sort(out.root, out.root + out.count);
  return out;
}

}  // namespace hapsim
