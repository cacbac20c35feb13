#include "darboux/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "darboux/errors.hpp"
#include "darboux/ode.hpp"
#include "darboux/quadrature.hpp"

namespace darboux::oracle {

namespace {

using susy::Family;
using susy::Partner;

enum class Layout { Vertex, Cell };

Layout detect_layout(std::span<const double> grid, double h) {
  if (std::abs(grid[0]) <= 1e-12 * h) return Layout::Vertex;
  if (std::abs(grid[0] - 0.5 * h) <= 1e-9 * h) return Layout::Cell;
  throw GridMismatchError("boundary condition at p = 0 needs a grid starting at 0 or h/2");
}

double robin_ratio(double c, double h) { return (1.0 - 0.5 * h * c) / (1.0 + 0.5 * h * c); }

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    m = std::max(m, std::abs(x));
  }
  return m;
}

// Number of eigenvalues below x of the symmetric tridiagonal matrix with
// diagonal d and squared off-diagonals e2.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x) {
  constexpr double tiny = 1e-300;
  std::size_t count = 0;
  double q = d[0] - x;
  if (q == 0.0) q = -tiny;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - x - e2[i - 1] / q;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

void BoundarySpec::validate() const {
  const bool robin = kind == BoundaryKind::Robin;
  if (robin != robin_coefficient.has_value())
    throw DomainError("BoundarySpec: robin_coefficient must be present iff kind is Robin");
  if (robin && !std::isfinite(*robin_coefficient))
    throw DomainError("BoundarySpec: robin_coefficient must be finite");
}

double BoundarySpec::slope() const {
  validate();
  switch (kind) {
    case BoundaryKind::Neumann:
      return 0.0;
    case BoundaryKind::Robin:
      return *robin_coefficient;
    case BoundaryKind::Dirichlet:
      break;
  }
  throw DomainError("BoundarySpec: Dirichlet condition has no slope");
}

void VerificationReport::add(std::string name, double residual, double tolerance) {
  const bool ok = residual <= tolerance;
  checks.push_back({std::move(name), residual, tolerance, ok});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

GridFunction solve_riccati(Family family, double p_start, double w_start, double p_end,
                           double tol) {
  if (!(p_start > 0.0)) throw DomainError("solve_riccati: p_start must be positive");
  if (!(p_end > p_start)) throw DomainError("solve_riccati: p_end must exceed p_start");
  if (!(tol > 0.0)) throw DomainError("solve_riccati: tol must be positive");

  std::function<double(double, double)> rhs;
  if (family == Family::One) {
    rhs = [](double p, double w) { return susy::potential(Partner::V2, p) - w * w; };
  } else {
    rhs = [](double p, double w) { return w * w - susy::potential(Partner::V1, p); };
  }
  ode::Options opt;
  opt.rtol = 0.1 * tol;
  opt.atol = 0.1 * tol;
  opt.max_abs_y = 1e6;
  auto traj = ode::dopri5(rhs, p_start, w_start, p_end, opt);
  return GridFunction(std::move(traj.t), std::move(traj.y));
}

GridFunction riccati_ode(Family family, double gamma, double p_start, double p_end, double tol) {
  return solve_riccati(family, p_start, susy::w_deformed(family, gamma, p_start), p_end, tol);
}

double riccati_residual(Family family, double gamma, double p, double h) {
  if (!(h > 0.0) || !(p - 2.0 * h > 0.0))
    throw DomainError("riccati_residual: stencil must stay inside p > 0");
  auto w = [&](double x) { return susy::w_deformed(family, gamma, x); };
  const double dw = (-w(p + 2 * h) + 8 * w(p + h) - 8 * w(p - h) + w(p - 2 * h)) / (12 * h);
  const double wp = w(p);
  if (family == Family::One) return std::abs(dw + wp * wp - susy::potential(Partner::V2, p));
  return std::abs(-dw + wp * wp - susy::potential(Partner::V1, p));
}

GridFunction apply_hamiltonian(const GridFunction& V, const GridFunction& psi,
                               const BoundarySpec& bc) {
  bc.validate();
  if (!V.same_grid(psi)) throw GridMismatchError("apply_hamiltonian: V and psi grids differ");
  const double h = psi.uniform_step();
  const Layout layout = detect_layout(psi.grid(), h);
  const std::size_t n = psi.size();
  const double ih2 = 1.0 / (h * h);

  double left_ghost = 0.0;
  if (layout == Layout::Vertex) {
    left_ghost = bc.kind == BoundaryKind::Dirichlet
                     ? -psi[1]
                     : psi[1] - 2.0 * h * bc.slope() * psi[0];
  } else {
    const double r = bc.kind == BoundaryKind::Dirichlet ? -1.0 : robin_ratio(bc.slope(), h);
    left_ghost = r * psi[0];
  }
  const double right_ghost = layout == Layout::Vertex ? 0.0 : -psi[n - 1];

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = i == 0 ? left_ghost : psi[i - 1];
    const double hi = i + 1 == n ? right_ghost : psi[i + 1];
    out[i] = (-hi + 2.0 * psi[i] - lo) * ih2 + V[i] * psi[i];
  }
  if (layout == Layout::Vertex && bc.kind == BoundaryKind::Dirichlet) out[0] = 0.0;
  return GridFunction(std::vector<double>(psi.grid().begin(), psi.grid().end()), std::move(out));
}

GridFunction apply_hamiltonian_interior(const GridFunction& V, const GridFunction& psi) {
  if (!V.same_grid(psi)) throw GridMismatchError("apply_hamiltonian: V and psi grids differ");
  const double h = psi.uniform_step();
  const std::size_t n = psi.size();
  if (n < 3) throw GridMismatchError("apply_hamiltonian: need at least three points");
  const double ih2 = 1.0 / (h * h);
  std::vector<double> grid(psi.grid().begin() + 1, psi.grid().end() - 1);
  std::vector<double> out(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i - 1] = (-psi[i + 1] + 2.0 * psi[i] - psi[i - 1]) * ih2 + V[i] * psi[i];
  return GridFunction(std::move(grid), std::move(out));
}

double zero_mode_residual(Family family, double gamma, double h, double P, double p_lo) {
  if (!(h > 0.0) || !(p_lo > 0.0) || !(P > p_lo + 2.0 * h))
    throw DomainError("zero_mode_residual: need h > 0, p_lo > 0 and P > p_lo + 2h");
  const auto grid = uniform_grid(p_lo, P, h);
  const auto V = GridFunction::sample(
      grid, [&](double p) { return susy::potential_deformed(family, gamma, p); });
  const auto psi = GridFunction::sample(
      grid, [&](double p) { return susy::zeromode({family, gamma, false}, p); });
  const auto r = apply_hamiltonian_interior(V, psi);
  return sup_abs(r.values()) / sup_abs(psi.values());
}

double zero_mode_residual(Family family, double gamma, double h, double P) {
  return zero_mode_residual(family, gamma, h, P, h);
}

double intertwine_residual(Family family, double gamma, const std::function<double(double)>& f,
                           std::span<const double> grid) {
  const std::size_t n = grid.size();
  if (n < 3) throw GridMismatchError("intertwine_residual: need at least three points");
  const GridFunction fg = GridFunction::sample(grid, f);
  const double h = fg.uniform_step();

  // A = sigma d/dp + W between H_b (undeformed partner) and H_a (deformed).
  const double sigma = family == Family::One ? -1.0 : 1.0;
  const Partner partner = family == Family::One ? Partner::V2 : Partner::V1;
  std::vector<double> w(n), va(n), vb(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = susy::w_deformed(family, gamma, grid[i]);
    va[i] = susy::potential_deformed(family, gamma, grid[i]);
    vb[i] = susy::potential(partner, grid[i]);
  }

  auto d1 = [&](auto&& g, std::size_t i) { return (g(i + 1) - g(i - 1)) / (2.0 * h); };
  auto d2 = [&](auto&& g, std::size_t i) {
    return (g(i + 1) - 2.0 * g(i) + g(i - 1)) / (h * h);
  };
  auto fi = [&](std::size_t i) { return fg[i]; };
  auto wf = [&](std::size_t i) { return w[i] * fg[i]; };
  auto vbf = [&](std::size_t i) { return vb[i] * fg[i]; };

  double m = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double r = -d2(wf, i) + w[i] * d2(fi, i) + sigma * (va[i] * d1(fi, i) - d1(vbf, i)) +
                     (va[i] - vb[i]) * w[i] * fg[i];
    if (std::isnan(r)) return r;
    m = std::max(m, std::abs(r));
  }
  return m;
}

double lowest_eigenvalue(const GridFunction& V, const BoundarySpec& bc) {
  bc.validate();
  const double h = V.uniform_step();
  const Layout layout = detect_layout(V.grid(), h);
  const std::size_t n = V.size();
  const double ih2 = 1.0 / (h * h);
  const double ih4 = ih2 * ih2;

  std::vector<double> d;
  std::vector<double> e2;
  d.reserve(n);
  e2.reserve(n);
  const std::size_t first = layout == Layout::Vertex && bc.kind == BoundaryKind::Dirichlet ? 1 : 0;
  for (std::size_t i = first; i < n; ++i) {
    if (!std::isfinite(V[i]))
      throw DomainError("lowest_eigenvalue: potential is not finite on the active grid");
    d.push_back(2.0 * ih2 + V[i]);
    if (i + 1 < n) e2.push_back(ih4);
  }
  if (d.empty()) throw GridMismatchError("lowest_eigenvalue: no unknowns");

  if (layout == Layout::Vertex) {
    if (bc.kind != BoundaryKind::Dirichlet) {
      // Row 0 couples to psi_1 with weight 2 (ghost psi_1 - 2hc psi_0);
      // the product of the off-diagonal pair is 2/h^4.
      d[0] += 2.0 * h * bc.slope() * ih2;
      if (!e2.empty()) e2[0] = 2.0 * ih4;
    }
  } else {
    const double r = bc.kind == BoundaryKind::Dirichlet ? -1.0 : robin_ratio(bc.slope(), h);
    d[0] -= r * ih2;
    d.back() += ih2;
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::sqrt(e2[i - 1]);
    if (i + 1 < d.size()) radius += std::sqrt(e2[i]);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * scale;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(d, e2, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GridFunction cell_averaged(const std::function<double(double)>& V, double h, double P,
                           double tol) {
  if (!(h > 0.0) || !(P > 2.0 * h)) throw DomainError("cell_averaged: need h > 0 and P > 2h");
  const auto n = static_cast<std::size_t>(std::llround(P / h));
  std::vector<double> grid(n), values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) * h;
    const double b = static_cast<double>(i + 1) * h;
    grid[i] = (static_cast<double>(i) + 0.5) * h;
    values[i] = quad::integrate(V, a, b, tol * h) / h;
  }
  return GridFunction(std::move(grid), std::move(values));
}

}  // namespace darboux::oracle
