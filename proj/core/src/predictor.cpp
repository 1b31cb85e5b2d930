#include "cop/predictor.hpp"

#include <algorithm>
#include <cmath>

#include "cop/errors.hpp"

namespace cop {

SplitResult split_series(const Series& t, double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw DataError("split ratio must be in (0, 1)");
  const std::size_t cut = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(t.size())));
  if (cut == 0 || cut >= t.size()) throw DataError("split leaves an empty half");
  SplitResult out;
  out.train.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cut));
  out.test.assign(t.begin() + static_cast<std::ptrdiff_t>(cut), t.end());
  return out;
}

std::vector<RankPattern> predict_top_k(const MiningReport& train_report,
                                       const RankPattern& o, std::size_t k,
                                       std::size_t horizon) {
  if (k < 1) throw ContractError("top-k must be >= 1");
  if (horizon < 1) throw ContractError("horizon must be >= 1");
  const std::size_t target_len = o.size() + horizon;
  std::vector<const FrequentPattern*> pool;
  if (auto it = train_report.frequent.find(target_len); it != train_report.frequent.end()) {
    for (const FrequentPattern& fp : it->second) pool.push_back(&fp);
  }
  // Highest support first; ties go to the lexicographically smaller pattern.
  std::stable_sort(pool.begin(), pool.end(),
                   [](const FrequentPattern* a, const FrequentPattern* b) {
                     if (a->support() != b->support()) return a->support() > b->support();
                     return a->pattern < b->pattern;
                   });
  std::vector<RankPattern> out;
  for (const FrequentPattern* fp : pool) {
    if (out.size() == k) break;
    out.push_back(fp->pattern);
  }
  return out;
}

PredictionEval evaluate_predictions(const std::vector<RankPattern>& predicted,
                                    const KeypointSeries& test_k,
                                    const RankPattern& o, std::size_t horizon) {
  const std::size_t g = o.size() + horizon;
  for (const RankPattern& p : predicted) {
    if (p.size() != g || !is_prefix_extension(p, o)) {
      throw ContractError("prediction does not extend the prefix at this horizon");
    }
  }
  PredictionEval eval;
  eval.predicted = predicted;

  std::vector<int> scratch;
  for (Pos end = static_cast<Pos>(g); end <= test_k.size(); ++end) {
    if (!try_relative_order(test_k.window(end, g), scratch)) continue;
    RankPattern w{std::vector<int>(scratch)};
    if (!is_prefix_extension(w, o)) continue;
    ++eval.test_support[std::move(w)];
  }

  for (const auto& [w, support] : eval.test_support) {
    const bool hit = std::find(predicted.begin(), predicted.end(), w) != predicted.end();
    if (hit) {
      eval.tp_mass += support;
    } else {
      eval.fn_mass += support;
    }
  }
  for (const RankPattern& p : predicted) {
    if (!eval.test_support.contains(p)) ++eval.fp_count;
  }

  if (!predicted.empty()) {
    eval.precision = static_cast<double>(predicted.size() - eval.fp_count) /
                     static_cast<double>(predicted.size());
  }
  if (eval.tp_mass + eval.fn_mass > 0) {
    eval.recall = static_cast<double>(eval.tp_mass) /
                  static_cast<double>(eval.tp_mass + eval.fn_mass);
  }
  if (eval.precision + eval.recall > 0.0) {
    eval.f1 = 2.0 * eval.precision * eval.recall / (eval.precision + eval.recall);
  }
  return eval;
}

PredictionRun run_prediction(const Series& t, const RankPattern& o,
                             std::size_t minsup, double ratio, std::size_t top_k,
                             std::size_t horizon, bool use_keypoints) {
  const SplitResult halves = split_series(t, ratio);
  const KeypointSeries train_k =
      use_keypoints ? extract_keypoints(halves.train) : as_keypoints(halves.train);
  const KeypointSeries test_k =
      use_keypoints ? extract_keypoints(halves.test) : as_keypoints(halves.test);

  PredictionRun run;
  run.ratio = ratio;
  run.top_k = top_k;
  run.horizon = horizon;
  run.train_report = mine_pattern(train_k, o, minsup, Algorithm::CopMiner);
  run.train_report.keypoints_enabled = use_keypoints;

  const std::vector<RankPattern> predicted =
      predict_top_k(run.train_report, o, top_k, horizon);
  if (auto it = run.train_report.frequent.find(o.size() + horizon);
      it != run.train_report.frequent.end()) {
    for (const FrequentPattern& fp : it->second) {
      if (std::find(predicted.begin(), predicted.end(), fp.pattern) != predicted.end()) {
        run.train_support[fp.pattern] = fp.support();
      }
    }
  }
  run.eval = evaluate_predictions(predicted, test_k, o, horizon);
  return run;
}

}  // namespace cop
