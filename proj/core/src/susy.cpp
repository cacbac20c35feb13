#include "darboux/susy.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/grid_function.hpp"
#include "darboux/quadrature.hpp"

namespace darboux::susy {

namespace {

constexpr double kFourThirds = 4.0 / 3.0;

// Table spacing for gamma1 / gamma2. Between nodes a fixed 16-point
// Gauss-Legendre rule in s = sqrt(p) supplies the remainder; in that
// variable the integrands 2s exp(-+4 s^3/3) are entire, so the rule is at
// machine precision and gamma(p) is smooth enough for finite differences.
constexpr double kTableStep = 1.0 / 16.0;
// mu2(16) = exp(-85.3); the remainder past here is below double resolution.
constexpr double kGamma2TableEnd = 16.0;

double phase(double p) { return kFourThirds * p * std::sqrt(p); }  // 4p^{3/2}/3

// phase(p) - phase(q) for 0 <= q <= p, to relative precision: the direct
// difference loses |phase| ulps, which the gamma1 ratio would then carry
// as non-smooth noise.
double phase_gap(double p, double q) {
  const double rp = std::sqrt(p);
  const double rq = std::sqrt(q);
  return kFourThirds * (p - q) * (p + rp * rq + q) / (rp + rq);
}

// Integral of exp(-phase_gap(p, q)) over q in [a, p]. On the first panel
// (a == 0) the rule runs in s = sqrt(q), where the integrand is entire;
// elsewhere in q itself, keeping every term of relative precision.
double mu1_ratio_panel(double a, double p) {
  if (a == 0.0) {
    const double zp = phase(p);
    return quad::gauss_legendre(
        [zp](double s) { return 2.0 * s * std::exp(kFourThirds * s * s * s - zp); }, 0.0,
        std::sqrt(p));
  }
  return quad::gauss_legendre([p](double q) { return std::exp(-phase_gap(p, q)); }, a, p);
}

void require_nonnegative(double p, const char* who) {
  if (!(p >= 0.0)) throw DomainError(std::string(who) + ": requires p >= 0");
}

void require_positive(double p, const char* who) {
  if (!(p > 0.0)) throw DomainError(std::string(who) + ": requires p > 0");
}

struct Gamma2Table {
  std::vector<double> values;
  Gamma2Table() {
    const auto grid = uniform_grid(0.0, kGamma2TableEnd, kTableStep);
    const auto mu2 = [](double p) { return std::exp(-phase(p)); };
    values = quad::cumulative(mu2, grid, 1e-14).values;
  }
};

// gamma1/mu1 at the nodes, by the exact one-panel recurrence
//   r(p_{k+1}) = r(p_k) exp(phi_k - phi_{k+1}) + int_{p_k}^{p_{k+1}} exp(phi(s) - phi_{k+1}) ds.
// The ratio is bounded (~ 1/(2 sqrt p)), so it carries full double precision
// where gamma1 itself would only be available through its logarithm.
struct Gamma1Table {
  std::vector<double> ratio;
  Gamma1Table() {
    const auto grid = uniform_grid(0.0, kGamma1QuadratureLimit, kTableStep);
    ratio.assign(grid.size(), 0.0);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      ratio[k + 1] = ratio[k] * std::exp(-phase_gap(grid[k + 1], grid[k])) +
                     mu1_ratio_panel(grid[k], grid[k + 1]);
    }
  }
};

const Gamma2Table& gamma2_table() {
  static const Gamma2Table table;
  return table;
}

const Gamma1Table& gamma1_table() {
  static const Gamma1Table table;
  return table;
}

std::size_t table_index(double p, std::size_t last) {
  const auto k = static_cast<std::size_t>(std::floor(p / kTableStep));
  return k > last ? last : k;
}

// gamma1(p)/mu1(p) ~ 1/(2 sqrt p) * sum_k (1/3)_k / z^k, z = 4p^{3/2}/3,
// summed up to the smallest term.
double gamma1_ratio_asymptotic(double p) {
  const double z = phase(p);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double next = term * (1.0 / 3.0 + k) / z;
    if (std::fabs(next) >= std::fabs(term)) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / (2.0 * std::sqrt(p));
}

double gamma1_ratio_table(double p) {
  const auto& table = gamma1_table();
  const std::size_t k = table_index(p, table.ratio.size() - 1);
  const double pk = kTableStep * static_cast<double>(k);
  if (p == pk) return table.ratio[k];
  return table.ratio[k] * std::exp(-phase_gap(p, pk)) + mu1_ratio_panel(pk, p);
}

// gamma1(p) / mu1(p).
double gamma1_ratio(double p) {
  if (p == 0.0) return 0.0;
  if (p <= kGamma1QuadratureLimit) return gamma1_ratio_table(p);
  return gamma1_ratio_asymptotic(p);
}

[[noreturn]] void throw_pole(Family family, double gamma, double p);

// (g - gamma1(p)) / mu1(p) for finite g; throws at a pole.
double family_two_denominator(double gamma, double p) {
  const double d = gamma * std::exp(-phase(p)) - gamma1_ratio(p);
  if (d == 0.0 || std::log(std::fabs(d)) + phase(p) < std::log(kPoleThreshold))
    throw_pole(Family::Two, gamma, p);
  return d;
}

[[noreturn]] void throw_pole(Family family, double gamma, double p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "pole of the family %s deformation with gamma = %g at p = %.17g",
                to_string(family), gamma, p);
  throw SingularityError(buf, p);
}

// mu2/(g + gamma2) for family One.
double family_one_ratio(double gamma, double p) {
  if (std::isinf(gamma)) return 0.0;
  const double den = gamma + gamma2(p);
  if (std::fabs(den) < kPoleThreshold) throw_pole(Family::One, gamma, p);
  return std::exp(-phase(p)) / den;
}

// mu1/(g - gamma1) for family Two.
double family_two_ratio(double gamma, double p) {
  if (std::isinf(gamma)) return 0.0;
  return 1.0 / family_two_denominator(gamma, p);
}

double deformation_ratio(Family family, double gamma, double p) {
  return family == Family::One ? family_one_ratio(gamma, p) : family_two_ratio(gamma, p);
}

struct NormCache {
  std::mutex mutex;
  std::map<double, double> integrals;
};

NormCache& norm_cache() {
  static NormCache cache;
  return cache;
}

}  // namespace

const char* to_string(Family f) noexcept { return f == Family::One ? "1" : "2"; }

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Valid:
      return "Valid";
    case Status::SingularPotential:
      return "SingularPotential";
    case Status::NonNormalizable:
      return "NonNormalizable";
    case Status::Invalid:
      return "Invalid";
  }
  return "Invalid";
}

DeformationParameter validate_gamma(Family family, double gamma) {
  DeformationParameter out{family, gamma, Status::Valid};
  if (std::isnan(gamma)) {
    out.status = Status::Invalid;
  } else if (family == Family::One) {
    if (gamma >= -gamma2_inf() && gamma <= 0.0) {
      out.status = Status::SingularPotential;
    } else if (gamma >= -1.0 && gamma <= 0.0) {
      out.status = Status::NonNormalizable;
    }
  } else if (gamma >= 0.0) {
    out.status = Status::SingularPotential;
  }
  return out;
}

std::string describe_violation(const DeformationParameter& param) {
  char buf[320];
  const double g = param.gamma;
  switch (param.status) {
    case Status::Valid:
      std::snprintf(buf, sizeof buf, "gamma = %g is valid for family %s", g,
                    to_string(param.family));
      break;
    case Status::Invalid:
      std::snprintf(buf, sizeof buf, "gamma = %g is not a real number", g);
      break;
    case Status::SingularPotential:
      if (param.family == Family::One) {
        std::snprintf(buf, sizeof buf,
                      "gamma = %g is not allowed for family 1: it lies in [-%.4f, 0] where "
                      "gamma + gamma2(p) vanishes (singular potential), inside the excluded "
                      "interval [-1, 0]",
                      g, gamma2_inf());
      } else {
        std::snprintf(buf, sizeof buf,
                      "gamma = %g is not allowed for family 2: gamma must be strictly "
                      "negative (gamma < 0), otherwise gamma - gamma1(p) vanishes",
                      g);
      }
      break;
    case Status::NonNormalizable:
      std::snprintf(buf, sizeof buf,
                    "gamma = %g is not allowed for family 1: the deformed zero mode requires "
                    "gamma outside the interval [-1, 0]",
                    g);
      break;
  }
  return buf;
}

double w0(double p) {
  require_nonnegative(p, "w0");
  return std::sqrt(p);
}

LogScaled mu(int index, double p) {
  require_nonnegative(p, "mu");
  if (index != 1 && index != 2) throw DomainError("mu: index must be 1 or 2");
  if (p == 0.0) return LogScaled::from_double(1.0);
  return LogScaled::from_log(index == 1 ? phase(p) : -phase(p));
}

double gamma2(double p) {
  require_nonnegative(p, "gamma2");
  const auto& table = gamma2_table();
  if (p >= kGamma2TableEnd) return table.values.back();
  const std::size_t k = table_index(p, table.values.size() - 1);
  const double pk = kTableStep * static_cast<double>(k);
  if (p == pk) return table.values[k];
  const auto integrand = [](double s) { return 2.0 * s * std::exp(-kFourThirds * s * s * s); };
  return table.values[k] + quad::gauss_legendre(integrand, std::sqrt(pk), std::sqrt(p));
}

double gamma2_inf() {
  static const double value =
      quad::integrate_semiinfinite([](double p) { return std::exp(-phase(p)); }, 0.0, 1e-14);
  return value;
}

LogScaled gamma1_quadrature(double p) {
  require_nonnegative(p, "gamma1_quadrature");
  if (p > kGamma1QuadratureLimit)
    throw DomainError("gamma1_quadrature: p is beyond the tabulated range");
  if (p == 0.0) return LogScaled::zero();
  return LogScaled::from_log(phase(p) + std::log(gamma1_ratio_table(p)));
}

LogScaled gamma1_asymptotic(double p) {
  require_positive(p, "gamma1_asymptotic");
  return LogScaled::from_log(phase(p) + std::log(gamma1_ratio_asymptotic(p)));
}

LogScaled gamma1(double p) {
  require_nonnegative(p, "gamma1");
  if (p == 0.0) return LogScaled::zero();
  return LogScaled::from_log(phase(p) + std::log(gamma1_ratio(p)));
}

double potential(Partner kind, double p) {
  require_positive(p, "potential");
  const double tail = 0.5 / std::sqrt(p);
  return kind == Partner::V1 ? p - tail : p + tail;
}

double superpotential(const Superpotential& w, double p) {
  using Kind = Superpotential::Kind;
  if (w.kind == Kind::Particular) {
    if (w.gamma) throw DomainError("superpotential: the particular solution takes no gamma");
    return w0(p);
  }
  if (!w.gamma) throw DomainError("superpotential: general solutions need gamma");
  // W1g generates family Two, W2g family One.
  return w_deformed(w.kind == Kind::General1 ? Family::Two : Family::One, *w.gamma, p);
}

double w_deformed(Family family, double gamma, double p) {
  require_nonnegative(p, "w_deformed");
  return std::sqrt(p) + deformation_ratio(family, gamma, p);
}

double delta_potential(Family family, double gamma, double p) {
  require_nonnegative(p, "delta_potential");
  const double r = deformation_ratio(family, gamma, p);
  const double root = std::sqrt(p);
  // One: -2 (ln|g + gamma2|)'' = 4 sqrt(p) S + 2 S^2,  S = mu2/(g + gamma2)
  // Two: -2 (ln|g - gamma1|)'' = 2 R (2 sqrt(p) + R), R = mu1/(g - gamma1)
  if (family == Family::One) return 4.0 * root * r + 2.0 * r * r;
  return 2.0 * r * (2.0 * root + r);
}

double potential_deformed(Family family, double gamma, double p) {
  require_positive(p, "potential_deformed");
  const Partner base = family == Family::One ? Partner::V1 : Partner::V2;
  return potential(base, p) + delta_potential(family, gamma, p);
}

double family_two_norm_integral(double gamma) {
  if (!(gamma < 0.0) || std::isinf(gamma)) {
    throw NonNormalizableError("family 2 normalization needs finite gamma < 0");
  }
  auto& cache = norm_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.integrals.find(gamma); it != cache.integrals.end()) return it->second;
  }
  const auto integrand = [gamma](double p) {
    const double d = family_two_denominator(gamma, p);
    return std::exp(-phase(p)) / (d * d);
  };
  // The integral is of order 1/|g|; ask for 1e-13 relative.
  const double value = quad::integrate_semiinfinite(integrand, 0.0, 1e-13 / std::fabs(gamma));
  std::lock_guard lock(cache.mutex);
  cache.integrals.emplace(gamma, value);
  return value;
}

double normalization_constant(const ZeroMode& mode) {
  if (!mode.normalized) return 1.0;
  if (!mode.gamma) {
    if (mode.family == Family::Two) {
      throw NonNormalizableError("the undeformed family 2 zero mode exp(2p^{3/2}/3) is not normalizable");
    }
    return 1.0 / std::sqrt(gamma2_inf());
  }
  const double g = *mode.gamma;
  const DeformationParameter param = validate_gamma(mode.family, g);
  if (param.status != Status::Valid) {
    throw NonNormalizableError(describe_violation(param) + " (status " +
                               to_string(param.status) + ")");
  }
  if (mode.family == Family::One) {
    if (std::isinf(g)) return 1.0 / std::sqrt(gamma2_inf());
    // int_0^inf mu2/(g + gamma2)^2 dp = gamma2(inf) / (g (g + gamma2(inf)))
    const double ginf = gamma2_inf();
    return std::sqrt(g * (g + ginf) / ginf);
  }
  return 1.0 / std::sqrt(family_two_norm_integral(g));
}

double zeromode(const ZeroMode& mode, double p) {
  require_nonnegative(p, "zeromode");
  // The normalized family Two mode vanishes pointwise as g -> -inf.
  if (mode.normalized && mode.family == Family::Two && mode.gamma && std::isinf(*mode.gamma) &&
      *mode.gamma < 0.0)
    return 0.0;
  const double c = normalization_constant(mode);
  if (!mode.gamma || (mode.family == Family::One && std::isinf(*mode.gamma))) {
    const double half_phase = 0.5 * phase(p);
    return c * std::exp(mode.family == Family::One ? -half_phase : half_phase);
  }
  const double g = *mode.gamma;
  if (mode.family == Family::One) {
    const double den = g + gamma2(p);
    if (std::fabs(den) < kPoleThreshold) throw_pole(Family::One, g, p);
    return c * std::exp(-0.5 * phase(p)) / den;
  }
  if (std::isinf(g)) return 0.0;
  return c * std::exp(-0.5 * phase(p)) / family_two_denominator(g, p);
}

std::optional<double> bending_critical_p(double gamma, double p_max, double scan_step) {
  if (!(gamma < 0.0)) throw DomainError("bending_critical_p: requires gamma < 0");
  if (!(p_max > 0.0) || !(scan_step > 0.0)) {
    throw DomainError("bending_critical_p: requires p_max > 0 and scan_step > 0");
  }
  const auto w = [gamma](double p) { return w_deformed(Family::Two, gamma, p); };
  const auto grid = uniform_grid(0.0, p_max, scan_step);
  std::optional<std::size_t> bracket;
  double prev = w(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = w(grid[i]);
    if ((prev < 0.0) != (cur < 0.0) || cur == 0.0) bracket = i - 1;
    prev = cur;
  }
  if (!bracket) return std::nullopt;
  double lo = grid[*bracket];
  double hi = grid[*bracket + 1];
  double w_lo = w(lo);
  if (w(hi) == 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double w_mid = w(mid);
    if (w_mid == 0.0) return mid;
    if ((w_mid < 0.0) == (w_lo < 0.0)) {
      lo = mid;
      w_lo = w_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace darboux::susy
