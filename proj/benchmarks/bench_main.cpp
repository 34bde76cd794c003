#include <benchmark/benchmark.h>

#include "hfejer/exact_identities.hpp"
#include "hfejer/hermite_fejer.hpp"
#include "hfejer/knots.hpp"

using namespace hfejer;

static void BM_GeneralBasis(benchmark::State& state) {
  const KnotSet knots = chebyshev1_knots(static_cast<unsigned>(state.range(0)), 256);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_fejer_basis(knots));
}
BENCHMARK(BM_GeneralBasis)->Arg(10)->Arg(20)->Arg(40);

static void BM_ClosedFormBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_closed_form(static_cast<unsigned>(state.range(0)), 256));
}
BENCHMARK(BM_ClosedFormBasis)->Arg(10)->Arg(20)->Arg(40);

static void BM_DerivativeSum(benchmark::State& state) {
  const FundamentalBasis basis = hermite_fejer_basis(equispaced_knots(static_cast<unsigned>(state.range(0)), -1, 1, 256));
  const ApFloat y0(make_rational(3, 10), 256);
  for (auto _ : state) benchmark::DoNotOptimize(derivative_sum(basis, 4, y0));
}
BENCHMARK(BM_DerivativeSum)->Arg(10)->Arg(40);

static void BM_GaussJacobiKnots(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi_knots(n, make_rational(1, 2), make_rational(-1, 3), 256));
}
BENCHMARK(BM_GaussJacobiKnots)->Arg(10)->Arg(40)->Arg(100);

static void BM_IdentitySweep(benchmark::State& state) {
  const auto n_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    for (unsigned n = 3; n <= n_max; n += 2) benchmark::DoNotOptimize(verify_identity_2(n));
}
BENCHMARK(BM_IdentitySweep)->Arg(51)->Arg(201);

static void BM_InversePowerSums(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(inverse_power_sums(201, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_InversePowerSums)->Arg(1)->Arg(4);
BENCHMARK_MAIN();
