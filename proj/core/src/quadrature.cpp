#include "darboux/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "darboux/errors.hpp"

namespace darboux::quad {

namespace {

// 15-point Kronrod abscissae (nonnegative half) and weights; the embedded
// 7-point Gauss rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kEvalsPerPanel = 15;

struct Panel {
  double a;
  double b;
  double result;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

Panel kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> fv{};
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  }
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (!std::isfinite(resk)) {
    throw NonConvergenceError("integrate: integrand is not finite on [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]");
  }
  return Panel{a, b, resk * half, err};
}

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
template <int N>
struct GaussLegendreRule {
  std::array<double, N> x{};
  std::array<double, N> w{};
  GaussLegendreRule() {
    for (int i = 0; i < N; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = z;
        for (int k = 2; k <= N; ++k) {
          const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = N * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::fabs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

template <int N>
double apply_gauss_legendre(const Integrand& f, double a, double b) {
  static const GaussLegendreRule<N> rule;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < N; ++i) sum += rule.w[i] * f(center + half * rule.x[i]);
  return sum * half;
}

void check_tolerance(double tol, const char* who) {
  if (!(tol >= 0.0)) throw DomainError(std::string(who) + ": tol must be nonnegative");
}

void check_grid(std::span<const double> grid) {
  if (grid.empty() || grid[0] != 0.0) throw DomainError("cumulative: grid must start at 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError("cumulative: grid must be strictly increasing");
    }
  }
}

}  // namespace

double integrate(const Integrand& f, double a, double b, double tol) {
  check_tolerance(tol, "integrate");
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return 0.0;

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  Panel first = kronrod15(f, a, b);
  double total_error = first.error;
  std::size_t evaluations = kEvalsPerPanel;
  panels.push(first);

  while (total_error > tol) {
    if (evaluations + 2 * kEvalsPerPanel > kEvaluationBudget) {
      throw NonConvergenceError("integrate: evaluation budget exhausted on [" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                "] with error estimate " + std::to_string(total_error));
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergenceError("integrate: panel width reached floating-point resolution");
    }
    panels.pop();
    const Panel left = kronrod15(f, worst.a, mid);
    const Panel right = kronrod15(f, mid, worst.b);
    evaluations += 2 * kEvalsPerPanel;
    panels.push(left);
    panels.push(right);
    // Re-summing avoids drift in the running error total.
    if (evaluations % (200 * kEvalsPerPanel) == 0) {
      total_error = 0.0;
      auto copy = panels;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    } else {
      total_error += left.error + right.error - worst.error;
    }
  }

  // Sum smallest panels first.
  std::vector<double> pieces;
  pieces.reserve(panels.size());
  while (!panels.empty()) {
    pieces.push_back(panels.top().result);
    panels.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](double x, double y) { return std::fabs(x) < std::fabs(y); });
  double sum = 0.0;
  double carry = 0.0;
  for (double v : pieces) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double integrate_semiinfinite(const Integrand& f, double a, double tol) {
  const auto mapped = [&f, a](double t) {
    if (t >= 1.0) return 0.0;
    const double s = 1.0 - t;
    const double value = f(a + t / s);
    if (value == 0.0) return 0.0;
    return value / (s * s);
  };
  return integrate(mapped, 0.0, 1.0, tol);
}

CumulativeIntegral cumulative(const Integrand& f, std::span<const double> grid, double tol,
                              bool with_tail) {
  check_tolerance(tol, "cumulative");
  check_grid(grid);
  CumulativeIntegral out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.assign(grid.size(), 0.0);
  out.tol = tol;
  const std::size_t panels = grid.size() > 1 ? grid.size() - 1 : 1;
  const double share = with_tail ? 0.5 : 1.0;
  const double panel_tol = share * tol / static_cast<double>(panels);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    out.values[i] = out.values[i - 1] + integrate(f, grid[i - 1], grid[i], panel_tol);
  }
  if (with_tail) {
    out.tail = out.values.back() + integrate_semiinfinite(f, grid.back(), 0.5 * tol);
  }
  return out;
}

LogScaled integrate_log(const Integrand& log_f, double a, double b, double rel_tol) {
  check_tolerance(rel_tol, "integrate_log");
  if (!(a <= b)) throw DomainError("integrate_log: requires a <= b");
  if (a == b) return LogScaled::zero();
  const double shift = std::max({log_f(a), log_f(b), log_f(0.5 * (a + b))});
  const auto scaled = [&log_f, shift](double x) { return std::exp(log_f(x) - shift); };
  const double estimate = apply_gauss_legendre<8>(scaled, a, b);
  const double value = integrate(scaled, a, b, rel_tol * estimate);
  if (value <= 0.0) return LogScaled::from_double(value);
  return LogScaled::from_log(std::log(value) + shift);
}

CumulativeLogIntegral cumulative_log(const Integrand& log_f, std::span<const double> grid,
                                     double rel_tol) {
  check_grid(grid);
  CumulativeLogIntegral out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.assign(grid.size(), LogScaled::zero());
  out.rel_tol = rel_tol;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    out.values[i] = out.values[i - 1] + integrate_log(log_f, grid[i - 1], grid[i], rel_tol);
  }
  return out;
}

double gauss_legendre(const Integrand& f, double a, double b, int n) {
  switch (n) {
    case 8:
      return apply_gauss_legendre<8>(f, a, b);
    case 16:
      return apply_gauss_legendre<16>(f, a, b);
    default:
      throw DomainError("gauss_legendre: n must be 8 or 16");
  }
}

}  // namespace darboux::quad
