#include <random>

#include <benchmark/benchmark.h>

#include "hyperfact/bounds.hpp"
#include "hyperfact/lattice.hpp"
#include "hyperfact/sieve.hpp"
#include "hyperfact/verify.hpp"

using namespace hyperfact;

namespace {

std::vector<u64> random_ns(std::size_t count, u64 max) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<u64> dist(2, max);
  std::vector<u64> v(count);
  for (auto& n : v) n = dist(gen);
  return v;
}

void BM_SieveSegment(benchmark::State& state) {
  const u64 lo = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    SegmentDivisors seg(lo, lo + (1 << 15) - 1);
    benchmark::DoNotOptimize(seg.small_divisors(lo).size());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 15));
}
BENCHMARK(BM_SieveSegment)->Arg(1 << 20)->Arg(1'000'000'000);

void BM_Thm2Bound(benchmark::State& state) {
  const auto ns = random_ns(4096, kMaxN);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(thm2_bound(ns[i++ & 4095]).value);
}
BENCHMARK(BM_Thm2Bound);

void BM_Thm3Bound(benchmark::State& state) {
  const auto ns = random_ns(4096, kMaxN);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(thm3_bound(ns[i++ & 4095]).value);
}
BENCHMARK(BM_Thm3Bound);

void BM_MinMaxDiff3FromSieve(benchmark::State& state) {
  const u64 lo = 1'000'000;
  const SegmentDivisors seg(lo, lo + 4095);
  std::vector<u64> divs;
  u64 i = 0;
  for (auto _ : state) {
    const u64 n = lo + (i++ & 4095);
    seg.divisors(n, divs);
    benchmark::DoNotOptimize(min_max_diff_3(n, divs));
  }
}
BENCHMARK(BM_MinMaxDiff3FromSieve);

void BM_Sweep(benchmark::State& state) {
  const auto th = static_cast<Theorem>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify(th, 6, 100'000).checked_count);
  state.SetLabel(std::string("theorem ") + std::string(theorem_label(th)));
}
BENCHMARK(BM_Sweep)
    ->Arg(static_cast<int>(Theorem::kIncrements))
    ->Arg(static_cast<int>(Theorem::kUpperSide))
    ->Arg(static_cast<int>(Theorem::kThreePoint))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
