// Threaded kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "lightsout/f2linalg.hpp"
#include "lightsout/game.hpp"
#include "lightsout/minweight.hpp"

using namespace lightsout;

namespace {

BitMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng() & 1u) m.set(r, c);
  return m;
}

// Square matrix whose first `zero_rows` rows are cleared, so the kernel has
// dimension at least zero_rows.
BitMatrix wide_kernel(std::size_t n, std::size_t zero_rows, std::uint64_t seed) {
  BitMatrix m = random_matrix(n, seed);
  for (std::size_t r = 0; r < zero_rows; ++r) m.set_row(r, BitVector(n));
  return m;
}

void BM_RowReduce(benchmark::State& st) {
  const auto m = random_matrix(st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(row_reduce(m));
}

void BM_RowReduceSerial(benchmark::State& st) {
  const auto m = random_matrix(st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(serial::row_reduce(m));
}

void BM_LightsOutGrid(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Graph g = grid_graph(n, n);
  for (auto _ : st) benchmark::DoNotOptimize(compile(g, Variant::classic()));
}

void BM_MinWeight(benchmark::State& st) {
  const auto m = wide_kernel(64, st.range(0), 2);
  const BitVector c = m * BitVector::ones(64);
  for (auto _ : st) benchmark::DoNotOptimize(min_weight_solution(m, c));
}

void BM_MinWeightSerial(benchmark::State& st) {
  const auto m = wide_kernel(64, st.range(0), 2);
  const BitVector c = m * BitVector::ones(64);
  for (auto _ : st) benchmark::DoNotOptimize(serial::min_weight_solution(m, c));
}

}  // namespace

BENCHMARK(BM_RowReduce)->Arg(128)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduceSerial)->Arg(128)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LightsOutGrid)->Arg(5)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
