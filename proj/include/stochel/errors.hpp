#pragma once

#include <stdexcept>
#include <string>

namespace stochel {

/// Raised when adaptive quadrature exhausts max_depth before reaching the
/// requested tolerance. Carries the best estimate and its error bound so
/// callers can decide whether the partial result is still usable.
class ToleranceError : public std::runtime_error {
  public:
    ToleranceError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

  private:
    double estimate_;
    double error_bound_;
};

/// Simulation request exceeds the configured step or memory budget.
class BudgetExceededError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Time step violates the drift-gradient stability bound.
class StepSizeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace stochel
