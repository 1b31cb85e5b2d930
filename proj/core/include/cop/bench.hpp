#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cop/miner.hpp"

namespace cop {

struct BenchSpec {
  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> repeats;  // series is concatenated this many times
  std::size_t minsup = 1;
  bool use_keypoints = true;
  int samples = 1;  // timing samples per cell; the best one is reported
};

struct BenchCell {
  Algorithm algo;
  std::size_t repeat = 1;
  double wall_ms = 0.0;
  MiningReport report;
};

// Runs the (algorithm x repeat) matrix in spec order. Each cell times one
// full mining run (keypoint extraction included) on the series repeated
// `repeat` times.
std::vector<BenchCell> run_bench(const Series& t, const RankPattern& o,
                                 const BenchSpec& spec);

// CSV table of the matrix; wall time is the only non-deterministic column.
std::string bench_to_csv(const std::vector<BenchCell>& cells);

}  // namespace cop
