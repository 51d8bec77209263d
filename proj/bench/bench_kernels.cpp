#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "cif/frontier.hpp"
#include "cif/full_space.hpp"
#include "cif/kernels.hpp"
#include "cif/kset.hpp"

namespace {

using namespace cif;

std::vector<Mask> sample_family(int n, int k, std::size_t size) {
  auto all = all_ksets(n, k);
  std::mt19937_64 rng(7);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(size, all.size()));
  return all;
}

void BM_ShadowSerial(benchmark::State& st) {
  const auto fam = sample_family(16, 5, 200);
  const auto cand = all_ksets(16, 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::shadow_serial(fam, cand));
}
void BM_ShadowParallel(benchmark::State& st) {
  const auto fam = sample_family(16, 5, 200);
  const auto cand = all_ksets(16, 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::shadow_parallel(fam, cand));
}

void BM_FirstDisjointSerial(benchmark::State& st) {
  const auto rows = all_ksets(18, 4);
  const auto cols = all_ksets(18, 6);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::first_disjoint_serial(rows, cols));
}
void BM_FirstDisjointParallel(benchmark::State& st) {
  const auto rows = all_ksets(18, 4);
  const auto cols = all_ksets(18, 6);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::first_disjoint_parallel(rows, cols));
}

std::vector<std::uint64_t> random_bipartite(int left, int right) {
  std::mt19937_64 rng(11);
  std::vector<std::uint64_t> nb(static_cast<std::size_t>(left));
  for (auto& m : nb) m = rng() & ((std::uint64_t{1} << right) - 1);
  return nb;
}
void BM_ExpansionSerial(benchmark::State& st) {
  const auto nb = random_bipartite(18, 20);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::expansion_sweep_serial(nb, 20));
}
void BM_ExpansionParallel(benchmark::State& st) {
  const auto nb = random_bipartite(18, 20);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::expansion_sweep_parallel(nb, 20));
}

std::vector<std::uint32_t> random_graph(int v) {
  std::mt19937 rng(3);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(v), 0);
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (rng() % 4 == 0) {
        adj[static_cast<std::size_t>(a)] |= 1u << b;
        adj[static_cast<std::size_t>(b)] |= 1u << a;
      }
    }
  }
  return adj;
}
void BM_IndependenceSerial(benchmark::State& st) {
  const auto adj = random_graph(22);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::independence_brute_serial(adj));
}
void BM_IndependenceParallel(benchmark::State& st) {
  const auto adj = random_graph(22);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::independence_brute_parallel(adj));
}

void BM_ShadowScanSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::shadow_scan_serial(7, 3, 3, 5, 2, 10));
}
void BM_ShadowScanParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::shadow_scan_parallel(7, 3, 3, 5, 2, 10));
}

void BM_FrontierSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(frontier_table(18, 6, 5));
}
void BM_FrontierParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(frontier_table_parallel(18, 6, 5));
}

void BM_FullSpaceSerial(benchmark::State& st) {
  const Profile p{6, {3, 3}, std::nullopt};
  for (auto _ : st) benchmark::DoNotOptimize(full_space_optimum_serial(p));
}
void BM_FullSpaceParallel(benchmark::State& st) {
  const Profile p{6, {3, 3}, std::nullopt};
  for (auto _ : st) benchmark::DoNotOptimize(full_space_optimum(p));
}

}  // namespace

BENCHMARK(BM_ShadowSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShadowParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstDisjointSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstDisjointParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpansionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpansionParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndependenceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndependenceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShadowScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShadowScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrontierSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrontierParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullSpaceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullSpaceParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
