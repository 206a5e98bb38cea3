#include "hapsim/errors.hpp"

#include <cmath>
#include <string>

namespace hapsim {

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw invalid_input(std::string(name) + " must be finite");
  }
}

void check_positive(double v, const char* name) {
  check_finite(v, name);
  if (v <= 0.0) {
    throw invalid_input(std::string(name) + " must be positive");
  }
}

void check_non_negative(double v, const char* name) {
  check_finite(v, name);
  if (v < 0.0) {
    throw invalid_input(std::string(name) + " must be non-negative");
  }
}

void check_unit_interval(double v, const char* name) {
  check_finite(v, name);
  if (v < 0.0 || v > 1.0) {
    throw invalid_input(std::string(name) + " must lie in [0, 1]");
  }
}

void check_open_unit_interval(double v, const char* name) {
  check_finite(v, name);
  if (v <= 0.0 || v >= 1.0) {
    throw invalid_input(std::string(name) + " must lie strictly between 0 and 1");
  }
}

}  // namespace hapsim
