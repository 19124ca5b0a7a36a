#include <benchmark/benchmark.h>

#include "sccay/cayley.hpp"
#include "sccay/constructions.hpp"
#include "sccay/fingerprint.hpp"
#include "sccay/graph_checks.hpp"
#include "sccay/group_algebra.hpp"
#include "sccay/iso.hpp"

namespace {

const sccay::ConnectionSet& davis_set(int p) {
  static const sccay::ConnectionSet d3 = sccay::davis(3).connection_set;
  static const sccay::ConnectionSet d5 = sccay::davis(5).connection_set;
  return p == 3 ? d3 : d5;
}

void BM_BuildCayley(benchmark::State& state) {
  const auto& s = davis_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sccay::build_cayley(s));
}
BENCHMARK(BM_BuildCayley)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CheckSrg(benchmark::State& state) {
  const auto g = sccay::build_cayley(davis_set(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sccay::check_srg(g));
}
BENCHMARK(BM_CheckSrg)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GroupAlgebraSquare(benchmark::State& state) {
  const auto& s = davis_set(static_cast<int>(state.range(0)));
  const auto x = sccay::ga_from_indices(s.group(), s.indices());
  for (auto _ : state) benchmark::DoNotOptimize(sccay::ga_mul(x, x));
}
BENCHMARK(BM_GroupAlgebraSquare)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_AutomorphismScan(benchmark::State& state) {
  const auto& s = davis_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sccay::selfcomp_by_group_automorphism(s));
}
BENCHMARK(BM_AutomorphismScan)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_ModRank(benchmark::State& state) {
  const auto g = sccay::build_cayley(davis_set(5));
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sccay::mod_p_rank(g, p, 1));
}
BENCHMARK(BM_ModRank)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EdgeCliqueProfile(benchmark::State& state) {
  const auto g = sccay::build_cayley(davis_set(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sccay::edge_clique_profile(g));
}
BENCHMARK(BM_EdgeCliqueProfile)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SelfComplementaryDavis3(benchmark::State& state) {
  const auto g = sccay::build_cayley(davis_set(3));
  for (auto _ : state) benchmark::DoNotOptimize(sccay::is_self_complementary(g));
}
BENCHMARK(BM_SelfComplementaryDavis3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
