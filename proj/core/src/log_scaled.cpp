#include "darboux/log_scaled.hpp"

#include <cmath>
#include <ostream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

std::strong_ordering compare_doubles(double a, double b) noexcept {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

LogScaled LogScaled::from_double(double x) {
  if (std::isnan(x) || std::isinf(x)) {
    throw DomainError("LogScaled::from_double: non-finite value");
  }
  if (x == 0.0) return LogScaled{};
  return LogScaled(x > 0 ? 1 : -1, std::log(std::fabs(x)));
}

LogScaled LogScaled::from_log(double log_magnitude, int sign) {
  if (sign != 1 && sign != -1) {
    throw DomainError("LogScaled::from_log: sign must be +1 or -1");
  }
  if (!std::isfinite(log_magnitude)) {
    throw DomainError("LogScaled::from_log: log magnitude must be finite");
  }
  return LogScaled(sign, log_magnitude);
}

double LogScaled::to_double() const noexcept {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_magnitude_);
}

LogScaled LogScaled::abs() const noexcept {
  return sign_ == 0 ? LogScaled{} : LogScaled(1, log_magnitude_);
}

LogScaled LogScaled::sqrt() const {
  if (sign_ < 0) throw DomainError("LogScaled::sqrt: negative value");
  if (sign_ == 0) return LogScaled{};
  return LogScaled(1, 0.5 * log_magnitude_);
}

LogScaled LogScaled::pow(double exponent) const {
  if (sign_ < 0) throw DomainError("LogScaled::pow: negative base");
  if (sign_ == 0) {
    if (exponent > 0) return LogScaled{};
    throw DomainError("LogScaled::pow: zero to a non-positive power");
  }
  return LogScaled(1, exponent * log_magnitude_);
}

LogScaled LogScaled::operator-() const noexcept {
  return LogScaled(-sign_, log_magnitude_);
}

LogScaled operator*(const LogScaled& a, const LogScaled& b) noexcept {
  if (a.sign_ == 0 || b.sign_ == 0) return LogScaled{};
  return LogScaled(a.sign_ * b.sign_, a.log_magnitude_ + b.log_magnitude_);
}

LogScaled operator/(const LogScaled& a, const LogScaled& b) {
  if (b.sign_ == 0) throw DomainError("LogScaled: division by zero");
  if (a.sign_ == 0) return LogScaled{};
  return LogScaled(a.sign_ * b.sign_, a.log_magnitude_ - b.log_magnitude_);
}

LogScaled operator+(const LogScaled& a, const LogScaled& b) noexcept {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const bool a_larger = a.log_magnitude_ >= b.log_magnitude_;
  const LogScaled& big = a_larger ? a : b;
  const LogScaled& small = a_larger ? b : a;
  const double delta = small.log_magnitude_ - big.log_magnitude_;  // <= 0
  if (a.sign_ == b.sign_) {
    return LogScaled(big.sign_, big.log_magnitude_ + std::log1p(std::exp(delta)));
  }
  if (delta == 0.0) return LogScaled{};
  // |big| - |small| = |big| (1 - e^delta)
  return LogScaled(big.sign_, big.log_magnitude_ + std::log(-std::expm1(delta)));
}

LogScaled operator-(const LogScaled& a, const LogScaled& b) noexcept {
  return a + (-b);
}

std::strong_ordering operator<=>(const LogScaled& a, const LogScaled& b) noexcept {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::strong_ordering::equal;
  const auto by_mag = compare_doubles(a.log_magnitude_, b.log_magnitude_);
  return a.sign_ > 0 ? by_mag : compare_doubles(b.log_magnitude_, a.log_magnitude_);
}

bool operator==(const LogScaled& a, const LogScaled& b) noexcept {
  return (a <=> b) == std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const LogScaled& v) {
  if (v.sign() == 0) return os << "0";
  return os << (v.sign() < 0 ? "-" : "") << "exp(" << v.log_magnitude() << ")";
}

}  // namespace darboux
