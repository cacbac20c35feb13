#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "darboux/log_scaled.hpp"

namespace darboux::quad {

using Integrand = std::function<double(double)>;

/// Maximum number of integrand evaluations per integrate() call.
inline constexpr std::size_t kEvaluationBudget = 1'000'000;

/// Prefix integrals of f over a grid starting at 0.
struct CumulativeIntegral {
  std::vector<double> grid;
  std::vector<double> values;  // values[i] = integral over [grid[0], grid[i]]
  double tol = 0.0;            // absolute tolerance on every values[i]
  std::optional<double> tail;  // integral over [grid[0], inf) when requested
};

/// Same, for integrands only representable in log space.
struct CumulativeLogIntegral {
  std::vector<double> grid;
  std::vector<LogScaled> values;
  double rel_tol = 0.0;
};

/// Integral of f over [a, b] with absolute error <= tol.
///
/// Globally adaptive 7/15-point Gauss-Kronrod: the panel with the largest
/// error estimate is bisected until the summed estimate meets tol. Nodes
/// never touch the endpoints, so integrable endpoint singularities such as
/// p^{-1/2} are handled by repeated bisection toward the singular end.
/// Throws NonConvergenceError when kEvaluationBudget is exhausted.
double integrate(const Integrand& f, double a, double b, double tol);

/// Integral of f over [a, inf) with absolute error <= tol, through the map
/// p = a + t/(1-t) onto t in [0, 1). f must decay at least like
/// exp(-c p^{3/2}); f(p) == 0 is treated as exact.
double integrate_semiinfinite(const Integrand& f, double a, double tol);

/// Prefix integrals of f on grid (grid[0] == 0, strictly increasing). Each
/// panel is integrated to tol / (number of panels) so every prefix meets
/// tol. With with_tail the integral to infinity is appended as `tail`.
CumulativeIntegral cumulative(const Integrand& f, std::span<const double> grid, double tol,
                              bool with_tail = false);

/// Prefix integrals of exp(log_f) on grid, each panel to relative accuracy
/// rel_tol. The integrand is rescaled per panel by its largest endpoint
/// value, so nothing materializes outside double range.
CumulativeLogIntegral cumulative_log(const Integrand& log_f, std::span<const double> grid,
                                     double rel_tol);

/// Integral of exp(log_f) over [a, b] in log-scaled form, to rel_tol.
LogScaled integrate_log(const Integrand& log_f, double a, double b, double rel_tol);

/// Fixed n-point Gauss-Legendre rule on [a, b] (n in {8, 16}); a smooth
/// function of a and b, used for remainders of tabulated integrals.
double gauss_legendre(const Integrand& f, double a, double b, int n = 16);

}  // namespace darboux::quad
