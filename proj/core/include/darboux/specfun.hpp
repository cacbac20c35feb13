#pragma once

#include "darboux/log_scaled.hpp"

// Gamma function, incomplete gamma functions and the generalized
// exponential integral E_q(z) for positive real arguments.
//
// All functions are pure and throw darboux::DomainError outside their
// domain.
namespace darboux::specfun {

/// Gamma(a) for a > 0.
double gamma_fn(double a);

/// Lower incomplete gamma: integral of t^{a-1} e^{-t} over [0, x].
double lower_gamma(double a, double x);

/// Upper incomplete gamma Gamma(a, x): integral of t^{a-1} e^{-t} over
/// [x, inf). Power series for x < a + 1, continued fraction otherwise.
double upper_gamma(double a, double x);

/// Gamma(a, x) in log-scaled form; does not underflow for large x.
LogScaled upper_gamma_scaled(double a, double x);

/// E_q(z) = integral of e^{-zt} t^{-q} over [1, inf), q in (0, 1], z > 0.
///
/// Evaluated independently of upper_gamma: an alternating series around
/// z = 0 for z <= 1 and the Legendre continued fraction otherwise, so the
/// rescaling identity E_q(z) = z^{q-1} Gamma(1-q, z) is a genuine check.
/// Negative z would need an analytic continuation and is rejected.
double expint_E(double q, double z);

/// e^z E_q(z); finite for all z > 0.
double expint_E_scaled(double q, double z);

}  // namespace darboux::specfun
