#include <benchmark/benchmark.h>

#include <cmath>

#include "darboux/grid_function.hpp"
#include "darboux/oracle.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/specfun.hpp"
#include "darboux/susy.hpp"

namespace {

using darboux::susy::Family;

void BM_UpperGamma(benchmark::State& state) {
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(darboux::specfun::upper_gamma(2.0 / 3.0, x));
    x = x > 40.0 ? 0.05 : x * 1.1;
  }
}
BENCHMARK(BM_UpperGamma);

void BM_ExpintE(benchmark::State& state) {
  double z = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(darboux::specfun::expint_E(1.0 / 3.0, z));
    z = z > 40.0 ? 0.05 : z * 1.1;
  }
}
BENCHMARK(BM_ExpintE);

void BM_Gamma2(benchmark::State& state) {
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(darboux::susy::gamma2(p));
    p = p > 20.0 ? 0.01 : p + 0.37;
  }
}
BENCHMARK(BM_Gamma2);

void BM_Gamma1(benchmark::State& state) {
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(darboux::susy::gamma1(p));
    p = p > 60.0 ? 0.01 : p + 0.37;
  }
}
BENCHMARK(BM_Gamma1);

void BM_EvalColumn(benchmark::State& state) {
  const auto grid = darboux::linspace(0.01, 10.0, 1000);
  const auto family = state.range(0) == 1 ? Family::One : Family::Two;
  const double g = state.range(0) == 1 ? 2.0 : -2.0;
  for (auto _ : state) {
    double acc = 0.0;
    for (double p : grid) acc += darboux::susy::potential_deformed(family, g, p);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EvalColumn)->Arg(1)->Arg(2);

void BM_IntegrateSemiinfinite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(darboux::quad::integrate_semiinfinite(
        [](double p) { return std::exp(-4.0 * std::pow(p, 1.5) / 3.0); }, 0.0, 1e-13));
  }
}
BENCHMARK(BM_IntegrateSemiinfinite);

void BM_LowestEigenvalue(benchmark::State& state) {
  const double h = 1.0 / static_cast<double>(state.range(0));
  const auto V = darboux::oracle::cell_averaged(
      [](double p) { return darboux::susy::potential_deformed(Family::One, 2.0, p); }, h, 20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        darboux::oracle::lowest_eigenvalue(V, darboux::oracle::BoundarySpec::robin(-0.5)));
  }
}
BENCHMARK(BM_LowestEigenvalue)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
