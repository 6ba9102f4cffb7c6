#pragma once

#include <stdexcept>
#include <string>

namespace dimreg {

// Integrand is not integrable at the origin (leading exponent <= -1).
class IntegrabilityError : public std::domain_error {
  public:
    explicit IntegrabilityError(const std::string& msg)
        : std::domain_error(msg) {}
};

// Adaptive quadrature could not meet the requested tolerance.  Carries the
// partial value and the tolerance actually achieved.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& msg, double partial, double achieved)
        : std::runtime_error(msg), partial_value(partial),
          achieved_rel_tol(achieved) {}

    double partial_value;
    double achieved_rel_tol;
};

}  // namespace dimreg
