#include <benchmark/benchmark.h>

#include "cheeger/constructions.hpp"
#include "cheeger/gridoracle.hpp"
#include "cheeger/solver.hpp"

using namespace cheeger;

namespace {

CantorDomainSpec cantor(int n) {
  CantorDomainSpec s;
  s.params = {1.0, solve_ell0(1.0 / 3, n, 1.0), 1.0 / 3, n};
  return s;
}

void BM_ErodeCantorOmega(benchmark::State& st) {
  auto cs = cantor(static_cast<int>(st.range(0)));
  ArcGon omega = build_perturbed_domain(cs, {0.5, 8}).omega;
  for (auto _ : st) benchmark::DoNotOptimize(area(inner_parallel(omega, 1.0)));
  st.counters["edges"] = static_cast<double>(omega.edges.size());
}
BENCHMARK(BM_ErodeCantorOmega)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CheegerKgonOmega(benchmark::State& st) {
  ArcGon E = build_kgon_domain({6, 1.0, solve_rho0(6, 1.0)});
  ArcGon omega = build_perturbed_domain(E, {0.3, 8}).omega;
  for (auto _ : st) benchmark::DoNotOptimize(cheeger_constant(omega).h);
}
BENCHMARK(BM_CheegerKgonOmega)->Unit(benchmark::kMillisecond);

void BM_GridCheegerSquare(benchmark::State& st) {
  ArcGon sq = make_rect(0, 0, 1, 1);
  double step = 1.0 / static_cast<double>(st.range(0));
  for (auto _ : st) {
    Grid g = rasterize(sq, step);
    distance_transform(g);
    benchmark::DoNotOptimize(grid_cheeger(g).h);
  }
}
BENCHMARK(BM_GridCheegerSquare)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ContactSet(benchmark::State& st) {
  auto cs = cantor(static_cast<int>(st.range(0)));
  ArcGon E = build_cantor_domain(cs);
  ArcGon omega = build_perturbed_domain(cs, {0.5, 8}).omega;
  for (auto _ : st) benchmark::DoNotOptimize(contact_set(E, omega).size());
}
BENCHMARK(BM_ContactSet)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
