#include <benchmark/benchmark.h>

#include <random>

#include "cop/matcher.hpp"
#include "cop/miner.hpp"
#include "cop/series.hpp"

namespace {

cop::Series random_series(std::size_t n, unsigned seed = 42) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  cop::Series out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

cop::RankPattern prefix_132() { return cop::RankPattern({1, 3, 2}); }

cop::RankPattern prefix_13254() { return cop::RankPattern({1, 3, 2, 5, 4}); }

void bm_extract_keypoints(benchmark::State& state) {
  const cop::Series t = random_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop::extract_keypoints(t));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_binary_match(benchmark::State& state) {
  const cop::Series t = random_series(static_cast<std::size_t>(state.range(0)));
  const cop::KeypointSeries k = cop::extract_keypoints(t);
  const cop::BinarySeq text = cop::filtration_encode(std::span<const double>(k.values));
  const cop::BinarySeq pat = cop::filtration_encode(prefix_13254());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop::binary_match_all(text, pat));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}

void bm_fav_occurrences(benchmark::State& state) {
  const cop::KeypointSeries k =
      cop::extract_keypoints(random_series(static_cast<std::size_t>(state.range(0))));
  const cop::RankPattern p = prefix_13254();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop::fav_occurrences(k, p));
  }
}

void bm_oracle_occurrences(benchmark::State& state) {
  const cop::KeypointSeries k =
      cop::extract_keypoints(random_series(static_cast<std::size_t>(state.range(0))));
  const cop::RankPattern p = prefix_13254();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop::oracle_occurrences(k, p));
  }
}

void mine_with(benchmark::State& state, cop::Algorithm algo,
               const cop::RankPattern& o) {
  const cop::KeypointSeries k =
      cop::extract_keypoints(random_series(static_cast<std::size_t>(state.range(0))));
  const std::size_t minsup = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cop::mine_pattern(k, o, minsup, algo));
  }
}

void bm_mine_copminer(benchmark::State& state) {
  mine_with(state, cop::Algorithm::CopMiner, prefix_132());
}
void bm_mine_noending(benchmark::State& state) {
  mine_with(state, cop::Algorithm::NoEnding, prefix_132());
}
void bm_mine_enum(benchmark::State& state) {
  mine_with(state, cop::Algorithm::Enum, prefix_132());
}
void bm_mine_sliding(benchmark::State& state) {
  mine_with(state, cop::Algorithm::SlidingOracle, prefix_132());
}

}  // namespace

BENCHMARK(bm_extract_keypoints)->Arg(10000)->Arg(100000);
BENCHMARK(bm_binary_match)->Arg(10000)->Arg(100000);
BENCHMARK(bm_fav_occurrences)->Arg(10000)->Arg(100000);
BENCHMARK(bm_oracle_occurrences)->Arg(10000)->Arg(100000);
BENCHMARK(bm_mine_copminer)->Args({20000, 20})->Args({100000, 100});
BENCHMARK(bm_mine_noending)->Args({20000, 20})->Args({100000, 100});
BENCHMARK(bm_mine_enum)->Args({20000, 20})->Args({100000, 100});
BENCHMARK(bm_mine_sliding)->Args({20000, 20})->Args({100000, 100});

BENCHMARK_MAIN();
