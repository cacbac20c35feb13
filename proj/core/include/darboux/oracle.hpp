#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darboux/grid_function.hpp"
#include "darboux/susy.hpp"

// Independent numerical checks of the closed forms in darboux::susy:
// Riccati ODE integration, finite-difference Hamiltonians, the Darboux
// intertwining relation and a Sturm-sequence lowest eigenvalue.
namespace darboux::oracle {

enum class BoundaryKind { Dirichlet, Neumann, Robin };

/// Condition at the origin. Robin means psi'(0) = robin_coefficient * psi(0).
struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::Dirichlet;
  std::optional<double> robin_coefficient;

  static BoundarySpec dirichlet() { return {BoundaryKind::Dirichlet, std::nullopt}; }
  static BoundarySpec neumann() { return {BoundaryKind::Neumann, std::nullopt}; }
  static BoundarySpec robin(double c) { return {BoundaryKind::Robin, c}; }

  /// Throws DomainError unless robin_coefficient is present iff kind is Robin.
  void validate() const;
  /// c in psi'(0) = c psi(0); 0 for Neumann. Not defined for Dirichlet.
  double slope() const;
};

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  /// passed is set to residual <= tolerance; a NaN residual fails.
  void add(std::string name, double residual, double tolerance);
  void append(const VerificationReport& other);
  bool passed() const noexcept;
};

/// Integrates W' = V2 - W^2 (family One) or W' = W^2 - V1 (family Two)
/// from p_start, starting from w_start, with adaptive Dormand-Prince steps.
/// Throws BlowUpError if |W| exceeds 1e6.
GridFunction solve_riccati(susy::Family family, double p_start, double w_start, double p_end,
                           double tol);

/// solve_riccati started from the closed form w_deformed(family, gamma, p_start).
GridFunction riccati_ode(susy::Family family, double gamma, double p_start, double p_end,
                         double tol);

/// Residual of the Riccati equation for the closed-form W at p, with the
/// derivative from the five-point central stencil of step h.
double riccati_residual(susy::Family family, double gamma, double p, double h = 1e-5);

/// (H psi)_i = (-psi_{i+1} + 2 psi_i - psi_{i-1})/h^2 + V_i psi_i on a
/// uniform grid. The origin boundary is enforced through a ghost point:
///  - grid[0] == 0 (vertex grid): psi_{-1} = psi_1 - 2 h c psi_0, Dirichlet
///    pins psi_0 = 0;
///  - grid[0] == h/2 (cell grid): psi_{-1} = psi_0 (1 - h c/2)/(1 + h c/2),
///    Dirichlet psi_{-1} = -psi_0.
/// Dirichlet holds at P = grid.back() + h (vertex) or + h/2 (cell).
/// Throws GridMismatchError if V and psi differ in grid or the grid is not
/// uniform or does not start at 0 or h/2.
GridFunction apply_hamiltonian(const GridFunction& V, const GridFunction& psi,
                               const BoundarySpec& bc);

/// Same stencil on interior points only (no boundary condition); the result
/// lives on grid[1 .. n-2].
GridFunction apply_hamiltonian_interior(const GridFunction& V, const GridFunction& psi);

/// ||H_g Psi_g||_inf / ||Psi_g||_inf over the interior points of the
/// uniform grid p_lo, p_lo + h, ..., P, with H_g and Psi_g the deformed
/// Hamiltonian and unnormalized zero mode of the family.
double zero_mode_residual(susy::Family family, double gamma, double h, double P, double p_lo);

/// The window [h, P].
double zero_mode_residual(susy::Family family, double gamma, double h, double P);

/// ||H_a (A f) - A (H_b f)||_inf on the interior of a uniform grid, where
///  - family One: A = -d/dp + W2g, H_a = -d^2 + V1g, H_b = -d^2 + V2;
///  - family Two: A =  d/dp + W1g, H_a = -d^2 + V2g, H_b = -d^2 + V1.
/// Central differences throughout. The D2 D1 f and D1 D2 f terms are the
/// same stencil on a uniform grid and are cancelled before evaluation.
double intertwine_residual(susy::Family family, double gamma,
                           const std::function<double(double)>& f, std::span<const double> grid);

/// Smallest eigenvalue of the tridiagonal discretization of -d^2/dp^2 + V
/// implied by apply_hamiltonian's boundary handling, by Sturm-sequence
/// bisection.
double lowest_eigenvalue(const GridFunction& V, const BoundarySpec& bc);

/// Cell averages (1/h) * integral of V over [i h, (i+1) h] on the cell
/// grid (i + 1/2) h, i < round(P/h). Integrable 1/sqrt(p) singularities at
/// the origin are resolved by the adaptive quadrature.
GridFunction cell_averaged(const std::function<double(double)>& V, double h, double P,
                           double tol = 1e-12);

}  // namespace darboux::oracle
