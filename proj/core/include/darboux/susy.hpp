#pragma once

#include <array>
#include <optional>
#include <string>

#include "darboux/log_scaled.hpp"

// One-parameter Darboux deformation of the momentum-space partner pair
//
//   H_-(p) = -d^2/dp^2 + p - 1/(2 sqrt p),   H_+(p) = -d^2/dp^2 + p + 1/(2 sqrt p)
//
// built on the particular Riccati solution W0 = sqrt(p). Integrating
// factors mu1 = exp(4p^{3/2}/3), mu2 = exp(-4p^{3/2}/3) and their
// antiderivatives gamma1, gamma2 (from p = 0) generate the general Riccati
// solutions
//
//   W1g = W0 + mu1/(g - gamma1)      (-W' + W^2 = V1)
//   W2g = W0 + mu2/(g + gamma2)      ( W' + W^2 = V2)
//
// Family One deforms V1 with W2g; family Two deforms V2 with W1g.
namespace darboux::susy {

enum class Family { One, Two };
enum class Partner { V1, V2 };

enum class Status { Valid, SingularPotential, NonNormalizable, Invalid };

struct DeformationParameter {
  Family family = Family::One;
  double gamma = 0.0;
  Status status = Status::Invalid;
};

struct Superpotential {
  enum class Kind { Particular, General1, General2 };
  Kind kind = Kind::Particular;
  std::optional<double> gamma;  // required for General1 / General2

  static Superpotential particular() { return {}; }
  static Superpotential general1(double g) { return {Kind::General1, g}; }
  static Superpotential general2(double g) { return {Kind::General2, g}; }
};

struct ZeroMode {
  Family family = Family::One;
  std::optional<double> gamma;  // absent: undeformed mode
  bool normalized = false;
};

/// Default deformation parameters for figures and verification suites.
inline constexpr std::array<double, 4> kFamilyOneTestGammas = {0.5, 1.0, 2.0, 5.0};
inline constexpr std::array<double, 4> kFamilyTwoTestGammas = {-0.5, -1.0, -2.0, -5.0};

/// Deformed quantities throw SingularityError when |g + gamma2| (family
/// One) or |g - gamma1| (family Two) falls below this.
inline constexpr double kPoleThreshold = 1e-14;

/// gamma1 comes from tabulated quadrature up to here, from its asymptotic
/// series beyond.
inline constexpr double kGamma1QuadratureLimit = 30.0;

const char* to_string(Family f) noexcept;
const char* to_string(Status s) noexcept;

/// Classifies g for a family:
///   One: g in [-gamma2(inf), 0]  -> SingularPotential
///        g in [-1, -gamma2(inf)) -> NonNormalizable
///   Two: g >= 0                  -> SingularPotential
///   NaN                          -> Invalid
DeformationParameter validate_gamma(Family family, double gamma);

/// Human-readable statement of the rule a non-Valid parameter violates.
std::string describe_violation(const DeformationParameter& param);

double w0(double p);

/// mu1(p) = exp(4p^{3/2}/3) (index 1), mu2(p) = exp(-4p^{3/2}/3) (index 2).
LogScaled mu(int index, double p);

/// Integral of mu2 over [0, p].
double gamma2(double p);
/// Integral of mu2 over [0, inf) = Gamma(2/3)/6^{1/3}, by semi-infinite
/// quadrature; computed once.
double gamma2_inf();
/// Integral of mu1 over [0, p], log-scaled.
LogScaled gamma1(double p);
/// The two regimes of gamma1, exposed for cross-checks: tabulated
/// quadrature (0 <= p <= kGamma1QuadratureLimit) and the asymptotic series
/// mu1/(2 sqrt p) * sum_k (1/3)_k / z^k, z = 4p^{3/2}/3 (p > 0).
LogScaled gamma1_quadrature(double p);
LogScaled gamma1_asymptotic(double p);

double potential(Partner kind, double p);

double superpotential(const Superpotential& w, double p);

double w_deformed(Family family, double gamma, double p);
double potential_deformed(Family family, double gamma, double p);
/// V1g - V1 (family One) or V2g - V2 (family Two). Finite at p = 0.
double delta_potential(Family family, double gamma, double p);

double zeromode(const ZeroMode& mode, double p);
/// Multiplier turning the unnormalized mode into the normalized one.
double normalization_constant(const ZeroMode& mode);
/// Integral of mu1/(g - gamma1)^2 over [0, inf) for family Two, g < 0.
double family_two_norm_integral(double gamma);

/// Largest p in [0, p_max] where W1g changes sign (the bend from the
/// +sqrt(p) branch to -sqrt(p)); nullopt if no sign change is found by a
/// scan with the given step. Requires g < 0.
std::optional<double> bending_critical_p(double gamma, double p_max = 30.0,
                                         double scan_step = 1e-3);

}  // namespace darboux::susy
