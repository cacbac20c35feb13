#pragma once

// Reference implementations that share no code with the library, and
// values frozen from 30-digit mpmath evaluations.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle_ref {

/// Composite Simpson on [a, b] with step close to h (even panel count).
inline double simpson(const std::function<double(double)>& f, double a, double b, double h) {
  auto n = static_cast<std::size_t>(std::ceil((b - a) / h));
  if (n % 2) ++n;
  const double step = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i)
    sum += (i % 2 ? 4.0 : 2.0) * f(a + step * static_cast<double>(i));
  return sum * step / 3.0;
}

namespace detail {
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Recursive adaptive Simpson with Richardson correction.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int max_depth = 50) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Frozen references (mpmath, 30 digits).
namespace frozen {
inline constexpr double gamma_two_thirds = 1.3541179394264004169;
inline constexpr double gamma_one_third = 2.6789385347077476337;
inline constexpr double expint_1_1 = 0.21938393439552027368;
inline constexpr double expint_third_2 = 0.060248898851346205524;
inline constexpr double expint_half_half = 0.79537949084670289607;
inline constexpr double upper_gamma_23_43 = 0.20495543407154845407;
inline constexpr double upper_gamma_half_3 = 0.02535650932346344319;
inline constexpr double upper_gamma_52_07 = 1.228726964865296512;
inline constexpr double gamma2_at_1 = 0.6324084983065338411;
inline constexpr double gamma2_at_2 = 0.73761347373258879721;
inline constexpr double gamma2_inf = 0.7451998204015125115;
inline constexpr double gamma1_at_1 = 1.8512603422873189476;
inline constexpr double gamma1_at_2 = 17.143891463559002716;
inline constexpr double gamma1_at_5 = 682644.60011400841064;
inline constexpr double w2g_g1_p1 = 1.1614774355739898087;
inline constexpr double v1g_g1_p1 = 1.1980596666950632936;
inline constexpr double w1g_gm1_p1 = -0.33052315090941394782;
inline constexpr double v2g_gm1_p1 = -0.28150889342582554759;
inline constexpr double w1g_gm2_p1 = 0.014954181874377318434;
inline constexpr double v2g_gm2_p1 = -0.49955274488893608974;
inline constexpr double bend_gm1000 = 3.3731280294328253747;
inline constexpr double bend_gm5 = 1.5859717931868749521;
inline constexpr double e_four_thirds = 3.7936678946831774;
}  // namespace frozen

}  // namespace oracle_ref
