#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/grid_function.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/susy.hpp"
#include "oracles.hpp"

namespace quad = darboux::quad;
namespace fz = oracle_ref::frozen;

namespace {

double mu2(double p) { return std::exp(-4.0 * std::pow(p, 1.5) / 3.0); }
double mu1(double p) { return std::exp(4.0 * std::pow(p, 1.5) / 3.0); }
double phase(double p) { return 4.0 * std::pow(p, 1.5) / 3.0; }

}  // namespace

TEST_CASE("integrate elementary integrands") {
  CHECK(quad::integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-10) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(quad::integrate([](double p) { return 1.0 / std::sqrt(p); }, 0.0, 1.0, 1e-10) -
                 2.0) <= 1e-10);
  CHECK(std::abs(quad::integrate([](double p) { return std::sin(p); }, 0.0, std::numbers::pi,
                                 1e-12) -
                 2.0) <= 1e-12);
  CHECK(quad::integrate(mu2, 0.5, 0.5, 1e-10) == 0.0);
}

TEST_CASE("integrate mu2 on [0, 1] against Simpson and the frozen value") {
  const double simpson = oracle_ref::adaptive_simpson(mu2, 0.0, 1.0, 1e-15);
  const double v = quad::integrate(mu2, 0.0, 1.0, 1e-12);
  CHECK(std::abs(v - simpson) <= 1e-12);
  CHECK(std::abs(v - fz::gamma2_at_1) <= 1e-12);
  CHECK(v == doctest::Approx(0.6323).epsilon(2e-4));
}

TEST_CASE("integrate reports non-convergence") {
  CHECK_THROWS_AS(quad::integrate([](double p) { return 1.0 / p; }, 0.0, 1.0, 1e-8),
                  darboux::NonConvergenceError);
  CHECK_THROWS_AS(quad::integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-8),
                  darboux::NonConvergenceError);
  CHECK_THROWS_AS(quad::integrate(mu2, 1.0, 0.0, 1e-8), darboux::DomainError);
  CHECK_THROWS_AS(quad::integrate(mu2, 0.0, 1.0, -1.0), darboux::DomainError);
}

TEST_CASE("panel additivity") {
  const double tol = 1e-11;
  const auto f = [](double p) { return std::exp(-p) / std::sqrt(p) + std::cos(3.0 * p); };
  const double whole = quad::integrate(f, 0.0, 4.0, tol);
  for (double b : {0.01, 0.5, 1.7, 3.99}) {
    CAPTURE(b);
    CHECK(std::abs(quad::integrate(f, 0.0, b, tol) + quad::integrate(f, b, 4.0, tol) - whole) <=
          2.0 * tol);
  }
}

TEST_CASE("tightening tol does not worsen the error against Simpson") {
  struct Case {
    double (*f)(double);
    double a, b;
  };
  const Case corpus[] = {{mu2, 0.0, 1.0},
                         {[](double p) { return std::sin(p) * std::exp(-0.3 * p); }, 0.0, 6.0},
                         {[](double p) { return 1.0 / (1.0 + p * p); }, -2.0, 3.0}};
  for (const auto& c : corpus) {
    const double ref = oracle_ref::simpson(c.f, c.a, c.b, 1e-4);
    double tol = 1e-4;
    double prev = std::abs(quad::integrate(c.f, c.a, c.b, tol) - ref);
    for (int k = 0; k < 25; ++k) {
      tol *= 0.5;
      const double err = std::abs(quad::integrate(c.f, c.a, c.b, tol) - ref);
      CHECK(err <= std::max(prev, 1e-14));
      CHECK(err <= tol + 1e-14);
      prev = err;
    }
  }
}

TEST_CASE("semi-infinite integrals") {
  const double g2 = quad::integrate_semiinfinite(mu2, 0.0, 1e-13);
  CHECK(std::abs(g2 - fz::gamma2_inf) <= 1e-13);
  CHECK(std::abs(g2 - 0.7452) <= 5e-4);
  CHECK(std::abs(quad::integrate_semiinfinite([](double p) { return std::exp(-p); }, 0.0, 1e-13) -
                 1.0) <= 1e-13);
  CHECK(std::abs(quad::integrate_semiinfinite([](double p) { return std::exp(-p); }, 2.0, 1e-13) -
                 std::exp(-2.0)) <= 1e-13);
}

TEST_CASE("semi-infinite family two normalization integral") {
  // d/dp [1/(g - gamma1)] = mu1/(g - gamma1)^2, so the integral is -1/g.
  for (double g : {-0.5, -1.0, -2.0}) {
    CHECK(std::abs(darboux::susy::family_two_norm_integral(g) + 1.0 / g) <= 1e-12);
  }
}

TEST_CASE("cumulative tabulation") {
  const std::vector<double> unit_grid = {0.0, 1.0, 2.0};
  const auto ones = quad::cumulative([](double) { return 1.0; }, unit_grid, 1e-12);
  REQUIRE(ones.values.size() == 3);
  CHECK(ones.values[0] == 0.0);
  CHECK(ones.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ones.values[2] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(!ones.tail);

  const auto grid = darboux::linspace(0.0, 1.0, 41);
  const double tol = 1e-12;
  const auto c = quad::cumulative(mu2, grid, tol, true);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ref = i == 0 ? 0.0 : oracle_ref::adaptive_simpson(mu2, 0.0, grid[i], 1e-15);
    CHECK(std::abs(c.values[i] - ref) <= tol + 1e-14);
    if (i > 0) {
      CHECK(c.values[i] >= c.values[i - 1]);
    }
  }
  CHECK(std::abs(c.values.back() - fz::gamma2_at_1) <= tol);
  REQUIRE(c.tail);
  CHECK(std::abs(*c.tail - fz::gamma2_inf) <= tol);

  const auto c1 = quad::cumulative(mu1, grid, tol);
  CHECK(std::abs(c1.values.back() - oracle_ref::simpson(mu1, 0.0, 1.0, 1e-4)) <= 1e-11);
  CHECK(c1.values.back() == doctest::Approx(fz::gamma1_at_1).epsilon(1e-12));

  CHECK_THROWS_AS(quad::cumulative(mu2, std::vector<double>{0.5, 1.0}, tol), darboux::DomainError);
  CHECK_THROWS_AS(quad::cumulative(mu2, std::vector<double>{0.0, 1.0, 1.0}, tol),
                  darboux::DomainError);
}

TEST_CASE("log-space integration of mu1 beyond double range") {
  const auto at5 = quad::integrate_log(phase, 0.0, 5.0, 1e-13);
  CHECK(at5.to_double() == doctest::Approx(fz::gamma1_at_5).epsilon(1e-12));
  const auto far = quad::integrate_log(phase, 0.0, 100.0, 1e-13);
  // gamma1(100) ~ mu1/(2 sqrt p) (1 + 1/(3z) + 4/(9z^2) + 28/(27z^3)), z = 4000/3
  const double z = phase(100.0);
  const double series = 1.0 / (3.0 * z) + 4.0 / (9.0 * z * z) + 28.0 / (27.0 * z * z * z);
  CHECK(far.log_magnitude() ==
        doctest::Approx(z - std::log(20.0) + std::log1p(series)).epsilon(1e-12));

  const auto grid = darboux::linspace(0.0, 2.0, 33);
  const auto c = quad::cumulative_log(phase, grid, 1e-13);
  CHECK(c.values[0].is_zero());
  CHECK(c.values[16].to_double() == doctest::Approx(fz::gamma1_at_1).epsilon(1e-12));
  CHECK(c.values[32].to_double() == doctest::Approx(fz::gamma1_at_2).epsilon(1e-12));
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  const auto poly15 = [](double x) { return std::pow(x, 15) - 3.0 * std::pow(x, 4) + 1.0; };
  const double exact15 = std::pow(2.0, 16) / 16.0 - 3.0 * 32.0 / 5.0 + 2.0;
  CHECK(quad::gauss_legendre(poly15, 0.0, 2.0, 8) == doctest::Approx(exact15).epsilon(1e-13));
  const auto poly31 = [](double x) { return std::pow(x, 31); };
  CHECK(quad::gauss_legendre(poly31, 0.0, 1.0, 16) == doctest::Approx(1.0 / 32.0).epsilon(1e-13));
  CHECK_THROWS_AS(quad::gauss_legendre(poly31, 0.0, 1.0, 5), darboux::DomainError);
}

TEST_CASE("integration is deterministic") {
  const auto f = [](double p) { return std::exp(-p * p) * std::cos(5.0 * p); };
  CHECK(quad::integrate(f, -3.0, 3.0, 1e-12) == quad::integrate(f, -3.0, 3.0, 1e-12));
}
