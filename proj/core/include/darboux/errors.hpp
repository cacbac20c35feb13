#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature ran out of its evaluation budget before meeting tol.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Denominator of a deformed quantity vanished (pole of W, V or Psi).
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double p)
      : std::runtime_error(what), p_(p) {}
  double p() const noexcept { return p_; }

 private:
  double p_;
};

// Requested a normalized zero mode whose deformation parameter forbids it.
class NonNormalizableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Riccati ODE solution left the |W| <= 1e6 window (pole crossing).
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double p)
      : std::runtime_error(what), p_(p) {}
  double p() const noexcept { return p_; }

 private:
  double p_;
};

// Two grid functions that must share a grid do not.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace darboux
