#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

#include "pintana/advection.hpp"
#include "pintana/elasticity.hpp"
#include "pintana/lfa.hpp"
#include "pintana/mgrit.hpp"
#include "pintana/sama.hpp"

using namespace pintana;

namespace {

constexpr double pi = std::numbers::pi;

AdvectionParams advection(int nx, int nt) {
  return {.c = 1.0, .dx = 1.0 / nx, .dt = 1.0 / nt};
}

ElasticityParams elasticity(int nx, int nt) {
  ElasticityParams p;
  p.dx = 1.0 / nx;
  p.dt = 1.0 / nt;
  return p;
}

void BM_NormTwo(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const CMatrix a = CMatrix::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(norm_two(a));
}
BENCHMARK(BM_NormTwo)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ElasticitySymbol(benchmark::State& state) {
  const auto p = elasticity(64, 64);
  const Frequency f{pi / 3, -pi / 5, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(phi_symbol_elasticity(f, p));
}
BENCHMARK(BM_ElasticitySymbol);

void BM_LfaTwoLevelSymbol(benchmark::State& state) {
  const auto p = elasticity(64, 64);
  const Frequency f{pi / 3, -pi / 5, 0.0};
  const CMatrix phi = phi_symbol_elasticity(f, p, 1);
  const CMatrix phic = phi_symbol_elasticity(f, p, 2);
  for (auto _ : state) {
    const CMatrix e = two_level_symbol(phi, phic, 2, pi / 8, Relaxation::FCF);
    benchmark::DoNotOptimize(norm_two(e));
  }
}
BENCHMARK(BM_LfaTwoLevelSymbol);

void BM_SamaFrequency(benchmark::State& state) {
  const int nt = static_cast<int>(state.range(0));
  const auto problem = advection_symbols(advection(64, nt));
  const Hierarchy h{.nt = nt, .m = 2, .m2 = 1, .dt = 1.0 / nt};
  const MethodSpec method{Relaxation::FCF, Cycle::TwoLevel};
  const auto levels = problem.levels({pi / 4, 0.0, 0.0}, h, method);
  const SamaVariant variant{Scope::Full, static_cast<NormKind>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(sama_frequency_values(levels, h, method, variant, 10));
}
BENCHMARK(BM_SamaFrequency)
    ->Args({64, static_cast<int>(NormKind::Exact2)})
    ->Args({64, static_cast<int>(NormKind::OneInfBound)})
    ->Args({512, static_cast<int>(NormKind::OneInfBound)})
    ->Unit(benchmark::kMicrosecond);

void BM_MgritCycle(benchmark::State& state) {
  const int nx = 64, nt = static_cast<int>(state.range(0));
  const Hierarchy h{.nt = nt, .m = 2, .m2 = 2, .dt = 1.0 / nt};
  const MethodSpec method{Relaxation::FCF, state.range(1) ? Cycle::V : Cycle::TwoLevel};
  const MgritAdvection solver(nx, advection(nx, nt), h, method);
  const InitialCondition ic{{{1.0, 2 * pi / nx}}};
  const auto g = solver.rhs(ic.evaluate(nx));
  auto u = solver.initial_guess(ic.evaluate(nx), InitialGuess::Random, kDefaultSeed);
  for (auto _ : state) {
    solver.cycle(u, g);
    benchmark::DoNotOptimize(u.back().data());
  }
}
BENCHMARK(BM_MgritCycle)->Args({256, 0})->Args({256, 1})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
