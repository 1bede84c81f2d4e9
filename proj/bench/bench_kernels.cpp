#include <benchmark/benchmark.h>

#include <map>

#include "chibound/colnum.hpp"
#include "chibound/generators.hpp"
#include "chibound/scan.hpp"

using namespace chibound;

namespace {

const Graph& sparse_graph(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, generate("gnp", GenParams{.n = n, .p = 6.0 / static_cast<double>(n)}, 1).front()).first;
  return it->second;
}

template <std::size_t (*F)(const Graph&, const LinearOrder&, std::size_t)>
void reach(benchmark::State& st) {
  const Graph& g = sparse_graph(static_cast<std::size_t>(st.range(0)));
  const auto order = degeneracy_order(g);
  for (auto _ : st) benchmark::DoNotOptimize(F(g, order, static_cast<std::size_t>(st.range(1))));
}

void scan_parallel(benchmark::State& st) {
  static const auto corpus = all_small_upto(6);
  for (auto _ : st) benchmark::DoNotOptimize(scan_bounds(corpus, ScanOptions{}).records.size());
}

void scan_serial(benchmark::State& st) {
  static const auto corpus = all_small_upto(6);
  for (auto _ : st) benchmark::DoNotOptimize(scan_bounds_serial(corpus, ScanOptions{}).records.size());
}

}  // namespace

BENCHMARK(reach<scol>)->Args({2000, 3})->Args({8000, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(reach<scol_serial>)->Args({2000, 3})->Args({8000, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(reach<wcol>)->Args({2000, 3})->Args({8000, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(reach<wcol_serial>)->Args({2000, 3})->Args({8000, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(scan_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
