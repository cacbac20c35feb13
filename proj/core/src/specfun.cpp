#include "darboux/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "darboux/errors.hpp"

namespace darboux::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 100000;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_positive(double a, const char* who) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(who) + ": argument must be positive and finite");
  }
}

void require_nonnegative(double x, const char* who) {
  if (!(x >= 0.0) || std::isnan(x)) {
    throw DomainError(std::string(who) + ": argument must be nonnegative");
  }
}

double lanczos_gamma(double a) {
  if (a < 0.5) {
    // Reflection keeps the approximation on its accurate half-plane.
    return std::numbers::pi / (std::sin(std::numbers::pi * a) * lanczos_gamma(1.0 - a));
  }
  const double x = a - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * sum;
}

// sum_{n>=0} x^n / (a (a+1) ... (a+n)); lower gamma = x^a e^{-x} * this.
double lower_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) return sum;
  }
  throw NonConvergenceError("lower incomplete gamma series did not converge");
}

// Continued fraction for e^{x} x^{-a} Gamma(a, x), modified Lentz.
double upper_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw NonConvergenceError("upper incomplete gamma continued fraction did not converge");
}

// Legendre continued fraction for e^{z} E_q(z):
//   1/(z + q/(1 + 1/(z + (q+1)/(1 + 2/(z + ...)))))
// partial numerators a_{2k} = q + k - 1, a_{2k+1} = k; denominators
// alternate z, 1.
double expint_fraction(double q, double z) {
  double f = z;  // b_1, a_1 = 1 applied at the end
  double c = z;
  double d = 0.0;
  for (int n = 2; n < 2 * kMaxIterations; ++n) {
    const int k = n / 2;
    const double an = (n % 2 == 0) ? q + k - 1 : static_cast<double>(k);
    const double bn = (n % 2 == 0) ? 1.0 : z;
    d = bn + an * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = bn + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < kEps) return 1.0 / f;
  }
  throw NonConvergenceError("exponential integral continued fraction did not converge");
}

// E_q(z) for 0 < z <= 1 from the expansion
//   E_q(z) = Gamma(1-q) z^{q-1} - sum_{k>=0} (-z)^k / (k! (1-q+k)).
// The k = 0 term is folded into the gamma term as
//   (Gamma(1+s) z^{-s} - 1)/s,  s = 1 - q,
// which stays accurate as q -> 1 and tends to -gamma_E - ln z.
double expint_series(double q, double z) {
  const double s = 1.0 - q;
  double head;
  if (s == 0.0) {
    head = -std::numbers::egamma - std::log(z);
  } else {
    head = std::expm1(std::lgamma(1.0 + s) - s * std::log(z)) / s;
  }
  double sum = 0.0;
  double power = 1.0;  // (-z)^k / k!
  for (int k = 1; k < kMaxIterations; ++k) {
    power *= -z / k;
    const double term = power / (s + k);
    sum += term;
    if (std::fabs(term) < kEps * std::fabs(head - sum)) break;
  }
  return head - sum;
}

void check_expint_args(double q, double z) {
  if (!(q > 0.0 && q <= 1.0)) throw DomainError("expint_E: q must lie in (0, 1]");
  if (!(z > 0.0) || std::isnan(z)) {
    throw DomainError("expint_E: z must be positive (negative z needs analytic continuation)");
  }
}

}  // namespace

double gamma_fn(double a) {
  require_positive(a, "gamma_fn");
  if (a > 171.6) return std::numeric_limits<double>::infinity();
  return lanczos_gamma(a);
}

double lower_gamma(double a, double x) {
  require_positive(a, "lower_gamma");
  require_nonnegative(x, "lower_gamma");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) {
    return std::exp(a * std::log(x) - x) * lower_series(a, x);
  }
  return gamma_fn(a) - upper_gamma(a, x);
}

double upper_gamma(double a, double x) {
  require_positive(a, "upper_gamma");
  require_nonnegative(x, "upper_gamma");
  if (x == 0.0) return gamma_fn(a);
  if (x < a + 1.0) {
    return gamma_fn(a) - std::exp(a * std::log(x) - x) * lower_series(a, x);
  }
  return std::exp(a * std::log(x) - x) * upper_fraction(a, x);
}

LogScaled upper_gamma_scaled(double a, double x) {
  require_positive(a, "upper_gamma_scaled");
  require_nonnegative(x, "upper_gamma_scaled");
  if (x < a + 1.0) return LogScaled::from_double(upper_gamma(a, x));
  return LogScaled::from_log(a * std::log(x) - x + std::log(upper_fraction(a, x)));
}

double expint_E(double q, double z) {
  check_expint_args(q, z);
  if (z <= 1.0) return expint_series(q, z);
  return std::exp(-z) * expint_fraction(q, z);
}

double expint_E_scaled(double q, double z) {
  check_expint_args(q, z);
  if (z <= 1.0) return std::exp(z) * expint_series(q, z);
  return expint_fraction(q, z);
}

}  // namespace darboux::specfun
