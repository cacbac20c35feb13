#pragma once

#include <functional>
#include <vector>

namespace darboux::ode {

struct Trajectory {
  std::vector<double> t;
  std::vector<double> y;
};

struct Options {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0: chosen from the derivative at t0
  double max_abs_y = 1e6;     // exceeding this aborts with BlowUpError
  std::size_t max_steps = 10'000'000;
};

/// Dormand-Prince 5(4) with PI step-size control for a scalar ODE
/// y' = f(t, y) from t0 to t1 > t0, recording every accepted step.
Trajectory dopri5(const std::function<double(double, double)>& f, double t0, double y0,
                  double t1, const Options& options);

}  // namespace darboux::ode
