#include <doctest.h>

#include <cmath>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/grid_function.hpp"

using darboux::GridFunction;

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0}), darboux::GridMismatchError);
  CHECK_THROWS_AS(GridFunction({0.0, 0.0}, {1.0, 2.0}), darboux::DomainError);
  CHECK_THROWS_AS(GridFunction({1.0, 0.5}, {1.0, 2.0}), darboux::DomainError);
  const GridFunction g({0.0, 0.5, 1.0}, {1.0, 2.0, 3.0});
  CHECK(g.size() == 3);
  CHECK(g.p(1) == 0.5);
  CHECK(g[2] == 3.0);
}

TEST_CASE("sampling and uniform step") {
  const auto grid = darboux::linspace(0.0, 2.0, 5);
  const auto g = GridFunction::sample(grid, [](double p) { return p * p; });
  CHECK(g[4] == 4.0);
  CHECK(g.uniform_step() == doctest::Approx(0.5));
  const GridFunction irregular({0.0, 0.1, 0.3}, {0.0, 0.0, 0.0});
  CHECK_THROWS_AS(irregular.uniform_step(), darboux::GridMismatchError);
  CHECK(g.same_grid(GridFunction::sample(grid, [](double) { return 0.0; })));
  CHECK(!g.same_grid(irregular));
}

TEST_CASE("linspace and uniform_grid") {
  const auto l = darboux::linspace(0.01, 10.0, 1000);
  CHECK(l.size() == 1000);
  CHECK(l.front() == 0.01);
  CHECK(l.back() == 10.0);
  CHECK_THROWS_AS(darboux::linspace(0.0, 1.0, 1), darboux::DomainError);

  const auto u = darboux::uniform_grid(0.0, 1.0, 1e-3);
  CHECK(u.size() == 1001);
  CHECK(u[500] == 500 * 1e-3);
  CHECK(std::abs(u.back() - 1.0) < 1e-12);
}
