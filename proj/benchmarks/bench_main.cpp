#include <cmath>

#include <benchmark/benchmark.h>

#include "xxz/asymptotics.hpp"
#include "xxz/momentum_map.hpp"
#include "xxz/observables.hpp"
#include "xxz/quadrature.hpp"
#include "xxz/velocity_atlas.hpp"

namespace {

xxz::Observables& cached_obs(int N) {
  static xxz::Observables obs64 = [] {
    xxz::ModelParams p;
    p.zeta = std::acos(0.57);
    p.density = 0.21;
    p.N = 64;
    return xxz::Observables::solve(p);
  }();
  static xxz::Observables obs128 = [] {
    xxz::ModelParams p;
    p.zeta = std::acos(0.57);
    p.density = 0.21;
    p.N = 128;
    return xxz::Observables::solve(p);
  }();
  return N == 64 ? obs64 : obs128;
}

void BM_solve(benchmark::State& state) {
  xxz::ModelParams p;
  p.zeta = std::acos(0.57);
  p.density = 0.21;
  p.N = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(xxz::Observables::solve(p));
}
BENCHMARK(BM_solve)->Arg(64)->Arg(128);

void BM_momentum_inverse(benchmark::State& state) {
  const xxz::MomentumMap map(cached_obs(64));
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(map.hat_p1_inverse(k));
    k = 0.1 + std::fmod(k + 0.37, 3.5);
  }
}
BENCHMARK(BM_momentum_inverse);

void BM_velocity_atlas_build(benchmark::State& state) {
  const xxz::MomentumMap map(cached_obs(64));
  for (auto _ : state)
    benchmark::DoNotOptimize(xxz::VelocityAtlas(map));
}
BENCHMARK(BM_velocity_atlas_build);

void BM_tanh_sinh_singular(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(xxz::tanh_sinh(
        [](double t) { return std::pow(t, -0.5) * std::cos(t); }, 0.0, 1.0));
}
BENCHMARK(BM_tanh_sinh_singular);

void BM_model_integral_quad(benchmark::State& state) {
  xxz::ModelIntegralSpec s;
  s.n_r = {2};
  s.eps_r = {1};
  s.xi_r = {1.0};
  s.u = 0.3;
  s.v = 1.0;
  s.delta_plus = 0.8;
  s.delta_minus = 0.8;
  for (auto _ : state)
    benchmark::DoNotOptimize(xxz::model_integral(s, 0.01));
}
BENCHMARK(BM_model_integral_quad);

void BM_model_integral_mc(benchmark::State& state) {
  xxz::ModelIntegralSpec s;
  s.n_r = {1, 1, 1};
  s.eps_r = {1, 1, -1};
  s.xi_r = {1.0, 0.7, 0.5};
  s.u = 0.3;
  s.v = 1.0;
  s.delta_plus = 0.6;
  s.delta_minus = 0.6;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        xxz::model_integral(s, 0.05, 1, static_cast<long long>(state.range(0))));
}
BENCHMARK(BM_model_integral_mc)->Arg(100000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
