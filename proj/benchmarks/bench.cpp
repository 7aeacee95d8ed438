#include <benchmark/benchmark.h>

#include <random>

#include "rankagg/rankagg.hpp"

namespace {

rankagg::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return rankagg::Permutation::from_order(std::move(order));
}

void BM_KendallDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  const auto a = random_permutation(n, rng);
  const auto b = random_permutation(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rankagg::kendall_distance(a, b));
}
BENCHMARK(BM_KendallDistance)->Arg(100)->Arg(1000)->Arg(10000);

void BM_StationaryMC4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng))
        beats[i][j] = true;
      else
        beats[j][i] = true;
    }
  const rankagg::MajorityTournament t(n, std::move(beats));
  const auto P = rankagg::build_mc4(t, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(rankagg::stationary_distribution(P));
}
BENCHMARK(BM_StationaryMC4)->Arg(20)->Arg(50)->Arg(100);

void BM_KemenyExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(3);
  std::vector<rankagg::ProfileEntry> entries;
  for (int i = 0; i < 5; ++i) entries.push_back({random_permutation(n, rng), 1});
  const rankagg::Profile profile(n, std::move(entries));
  for (auto _ : state) benchmark::DoNotOptimize(rankagg::kemeny_optimal(profile));
}
BENCHMARK(BM_KemenyExact)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ChainBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(4);
  std::vector<rankagg::ProfileEntry> entries;
  for (int i = 0; i < 7; ++i) entries.push_back({random_permutation(n, rng), 1});
  const rankagg::Profile profile(n, std::move(entries));
  for (auto _ : state)
    benchmark::DoNotOptimize(rankagg::build_chain(profile, rankagg::ChainVariant::MC1));
}
BENCHMARK(BM_ChainBuild)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
