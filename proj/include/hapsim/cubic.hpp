#pragma once

namespace hapsim {

struct CubicRoots {
  int count = 0;
  double root[3] = {0.0, 0.0, 0.0};
};

// Real roots of a x^3 + b x^2 + c x + d = 0, ascending order. Degrades to the
// quadratic/linear cases when leading coefficients vanish. Uses the depressed
// cubic with the trigonometric branch when all three roots are real and the
// cbrt-based branch otherwise.
CubicRoots solve_cubic(double a, double b, double c, double d);

}  // namespace hapsim
