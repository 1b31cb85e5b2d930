#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cop/miner.hpp"
#include "cop/pattern.hpp"
#include "cop/series.hpp"

namespace cop {

struct SplitResult {
  Series train;
  Series test;
};

// Chronological split: train = first floor(ratio * N) values, test = rest.
// Throws DataError when either half would be empty.
SplitResult split_series(const Series& t, double ratio);

// The k frequent patterns of length |o| + horizon with the highest
// training support; ties broken towards the lexicographically smaller
// pattern. Returns fewer when fewer exist.
std::vector<RankPattern> predict_top_k(const MiningReport& train_report,
                                       const RankPattern& o, std::size_t k,
                                       std::size_t horizon = 1);

struct PredictionEval {
  std::vector<RankPattern> predicted;
  // Test-side supports of every occurring extension of the prefix.
  std::map<RankPattern, std::size_t> test_support;
  std::size_t tp_mass = 0;   // summed test supports of predicted patterns
  std::size_t fn_mass = 0;   // summed test supports of unpredicted extensions
  std::size_t fp_count = 0;  // predicted patterns absent from the test side
  double precision = 0.0;    // (|predicted| - fp) / |predicted|
  double recall = 0.0;       // tp / (tp + fn)
  double f1 = 0.0;
};

// Scores the predictions against all length-(|o| + horizon) windows of
// the test keypoint series whose rank order extends o. Every occurring
// extension counts (no test-side support threshold).
PredictionEval evaluate_predictions(const std::vector<RankPattern>& predicted,
                                    const KeypointSeries& test_k,
                                    const RankPattern& o, std::size_t horizon = 1);

struct PredictionRun {
  MiningReport train_report;
  std::map<RankPattern, std::size_t> train_support;  // of the predicted patterns
  PredictionEval eval;
  double ratio = 0.0;
  std::size_t top_k = 0;
  std::size_t horizon = 1;
};

// Split -> per-half keypoint extraction -> train mining -> top-k -> eval.
PredictionRun run_prediction(const Series& t, const RankPattern& o,
                             std::size_t minsup, double ratio, std::size_t top_k,
                             std::size_t horizon = 1, bool use_keypoints = true);

}  // namespace cop
