#include <benchmark/benchmark.h>

#include "gammalift/char_table.hpp"
#include "gammalift/crystal.hpp"
#include "gammalift/dl_lift.hpp"
#include "gammalift/finite_torus.hpp"
#include "gammalift/oscillatory.hpp"
#include "gammalift/padic_chars.hpp"
#include "gammalift/satake.hpp"
#include "gammalift/volumes.hpp"
#include "gammalift/weights.hpp"

using namespace gammalift;

static void BM_torus_gamma_coxeter(benchmark::State& state) {
  long q = state.range(0);
  FiniteTorus torus(q, {2});
  AdditiveCharacter psi(q);
  for (auto _ : state) {
    FiniteTorusCharacter theta(torus, {1});
    benchmark::DoNotOptimize(torus_gamma(torus, theta, psi));
  }
}
BENCHMARK(BM_torus_gamma_coxeter)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

static void BM_gl2_table(benchmark::State& state) {
  long q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gl2_character_table(q));
}
BENCHMARK(BM_gl2_table)->Arg(3)->Arg(5);

static void BM_finite_main_sweep(benchmark::State& state) {
  long q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_finite_main(q));
}
BENCHMARK(BM_finite_main_sweep)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_oscillatory_oracle(benchmark::State& state) {
  WeightList rho = make_weight_list(1, {{1}});
  std::vector<PAdicCharacter> theta{unramified_character(3, {0.7, 0.2})};
  OscillatoryParams params;
  params.radius = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(oscillatory_oracle(rho, theta, {1.3, 0.0}, params));
}
BENCHMARK(BM_oscillatory_oracle)->Arg(6)->Arg(8);

static void BM_hall_littlewood(benchmark::State& state) {
  std::vector<long> lambda{static_cast<long>(state.range(0)), 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(hall_littlewood(lambda, 3));
}
BENCHMARK(BM_hall_littlewood)->Arg(2)->Arg(3);

static void BM_basic_function_rank2(benchmark::State& state) {
  WeightList rho = make_weight_list(2, {{1, 0}, {0, 1}});
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(satake_basic_function(rho, degree));
}
BENCHMARK(BM_basic_function_rank2)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_crystal_certify(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_weyl_action(m, m, 5, 42));
}
BENCHMARK(BM_crystal_certify)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_fiber_volume(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(monomial_fiber_volume({2, 3}, {0}, 5, 6, 1, 4));
}
BENCHMARK(BM_fiber_volume);

BENCHMARK_MAIN();
