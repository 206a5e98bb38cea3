#pragma once

#include <stdexcept>
#include <string>

namespace hapsim {

// Bad numeric input or a violated physical precondition. The CLI maps this
// family to exit code 3.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deployment geometry that breaks a scenario constraint; the message names
// the violated constraint.
class geometry_error : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

// Configuration problems (file parse or field validation). Exit code 2.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_finite(double v, const char* name);
void check_positive(double v, const char* name);
void check_non_negative(double v, const char* name);
void check_unit_interval(double v, const char* name);       // [0, 1]
void check_open_unit_interval(double v, const char* name);  // (0, 1)

}  // namespace hapsim
