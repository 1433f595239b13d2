#include <benchmark/benchmark.h>

#include "selsieve/oracle.hpp"
#include "selsieve/sieve.hpp"

namespace {

void BM_PrimesViaS2(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(selsieve::primes_via_s2(limit));
}

void BM_PrimesViaS6(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(selsieve::primes_via_s6(limit));
}

void BM_PrimesViaS4(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(selsieve::primes_via_s4(limit));
}

void BM_Eratosthenes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(selsieve::oracle::eratosthenes(limit).count());
}

void BM_S2SingleThread(benchmark::State& state) {
  const auto k_hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        selsieve::build_s2_spectrum(1, k_hi, selsieve::ScanMode::Restricted, {.threads = 1})
            .total_hits());
  }
}

BENCHMARK(BM_PrimesViaS2)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimesViaS6)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimesViaS4)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eratosthenes)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_S2SingleThread)->Arg(500'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
