#include "darboux/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "darboux/errors.hpp"

namespace darboux::ode {

namespace {

// Dormand-Prince tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b_hat (error weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

Trajectory dopri5(const std::function<double(double, double)>& f, double t0, double y0,
                  double t1, const Options& options) {
  if (!(t1 > t0)) throw DomainError("dopri5: requires t1 > t0");
  Trajectory out;
  out.t.push_back(t0);
  out.y.push_back(y0);

  double t = t0;
  double y = y0;
  double k1 = f(t, y);
  double h = options.initial_step;
  if (h <= 0.0) {
    const double scale = options.atol + options.rtol * std::fabs(y);
    h = 0.01 * scale / std::max(std::fabs(k1), 1e-12);
    h = std::clamp(h, 1e-12 * std::max(1.0, std::fabs(t0)), t1 - t0);
  }
  double err_prev = 1e-4;

  for (std::size_t step = 0; step < options.max_steps; ++step) {
    if (t >= t1) return out;
    const bool last = t + h >= t1;
    if (last) h = t1 - t;

    const double k2 = f(t + c2 * h, y + h * a21 * k1);
    const double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 =
        f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = f(t + h, y_new);
    const double err_abs =
        std::fabs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
    const double scale = options.atol + options.rtol * std::max(std::fabs(y), std::fabs(y_new));
    double err = err_abs / scale;
    if (!std::isfinite(err)) err = 1e10;

    if (err <= 1.0) {
      t = last ? t1 : t + h;
      y = y_new;
      k1 = k7;
      if (!std::isfinite(y) || std::fabs(y) > options.max_abs_y) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "ODE solution exceeded |y| = %g near t = %.10g",
                      options.max_abs_y, t);
        throw BlowUpError(buf, t);
      }
      out.t.push_back(t);
      out.y.push_back(y);
      // PI controller (Hairer-Wanner, beta = 0.04).
      double factor = 0.9 * std::pow(err, -0.17) * std::pow(err_prev, 0.04);
      if (err == 0.0) factor = 5.0;
      h *= std::clamp(factor, 0.2, 5.0);
      err_prev = std::max(err, 1e-4);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (h < 1e-15 * std::max(1.0, std::fabs(t))) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "ODE step size underflow near t = %.10g", t);
        throw BlowUpError(buf, t);
      }
    }
  }
  throw NonConvergenceError("dopri5: step budget exhausted");
}

}  // namespace darboux::ode
