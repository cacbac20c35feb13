#pragma once

#include <compare>
#include <iosfwd>

namespace darboux {

/// Real number stored as sign * exp(log_magnitude).
///
/// Used wherever exp(4p^{3/2}/3) and its antiderivative appear: those
/// overflow a double near p = 66 while the ratios built from them stay
/// moderate. The zero value has sign 0 and an unspecified log magnitude.
class LogScaled {
 public:
  constexpr LogScaled() = default;

  static LogScaled from_double(double x);
  /// sign must be -1 or +1; log_magnitude must be finite.
  static LogScaled from_log(double log_magnitude, int sign = 1);
  static constexpr LogScaled zero() { return LogScaled{}; }

  int sign() const noexcept { return sign_; }
  double log_magnitude() const noexcept { return log_magnitude_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// Materializes the value; overflows to +-inf or underflows to 0 as a
  /// double would.
  double to_double() const noexcept;

  LogScaled abs() const noexcept;
  /// Requires a nonnegative value.
  LogScaled sqrt() const;
  LogScaled pow(double exponent) const;

  LogScaled operator-() const noexcept;

  friend LogScaled operator*(const LogScaled& a, const LogScaled& b) noexcept;
  friend LogScaled operator/(const LogScaled& a, const LogScaled& b);
  friend LogScaled operator+(const LogScaled& a, const LogScaled& b) noexcept;
  friend LogScaled operator-(const LogScaled& a, const LogScaled& b) noexcept;

  LogScaled& operator*=(const LogScaled& o) noexcept { return *this = *this * o; }
  LogScaled& operator/=(const LogScaled& o) { return *this = *this / o; }
  LogScaled& operator+=(const LogScaled& o) noexcept { return *this = *this + o; }
  LogScaled& operator-=(const LogScaled& o) noexcept { return *this = *this - o; }

  friend std::strong_ordering operator<=>(const LogScaled& a, const LogScaled& b) noexcept;
  friend bool operator==(const LogScaled& a, const LogScaled& b) noexcept;

 private:
  constexpr LogScaled(int sign, double log_magnitude)
      : sign_(sign), log_magnitude_(log_magnitude) {}

  int sign_ = 0;
  double log_magnitude_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const LogScaled& v);

}  // namespace darboux
