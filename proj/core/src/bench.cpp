#include "cop/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "cop/errors.hpp"

namespace cop {

namespace {

Series repeat_series(const Series& t, std::size_t times) {
  Series out;
  out.reserve(t.size() * times);
  for (std::size_t r = 0; r < times; ++r) out.insert(out.end(), t.begin(), t.end());
  return out;
}

}  // namespace

std::vector<BenchCell> run_bench(const Series& t, const RankPattern& o,
                                 const BenchSpec& spec) {
  if (spec.algorithms.empty() || spec.repeats.empty()) {
    throw ContractError("bench needs at least one algorithm and one repeat factor");
  }
  std::vector<BenchCell> cells;
  for (std::size_t repeat : spec.repeats) {
    if (repeat < 1) throw ContractError("repeat factor must be >= 1");
    const Series scaled = repeat_series(t, repeat);
    for (Algorithm algo : spec.algorithms) {
      BenchCell cell;
      cell.algo = algo;
      cell.repeat = repeat;
      std::vector<double> samples;
      for (int sample = 0; sample < std::max(1, spec.samples); ++sample) {
        const auto start = std::chrono::steady_clock::now();
        const KeypointSeries k =
            spec.use_keypoints ? extract_keypoints(scaled) : as_keypoints(scaled);
        MiningReport report = mine_pattern(k, o, spec.minsup, algo);
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        if (sample == 0) {
          report.keypoints_enabled = spec.use_keypoints;
          cell.report = std::move(report);
        }
      }
      // Median sample: robust against both load spikes and the occasional
      // allocator-warm run that only small working sets get.
      std::nth_element(samples.begin(), samples.begin() + samples.size() / 2,
                       samples.end());
      cell.wall_ms = samples[samples.size() / 2];
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string bench_to_csv(const std::vector<BenchCell>& cells) {
  std::string out =
      "algorithm,repeat,wall_ms,candidates_checked,superpattern_occurrence_comparisons,"
      "frequent_patterns\n";
  char buf[64];
  for (const BenchCell& cell : cells) {
    std::snprintf(buf, sizeof buf, "%.3f", cell.wall_ms);
    out += algorithm_name(cell.algo) + "," + std::to_string(cell.repeat) + "," + buf + "," +
           std::to_string(cell.report.counters.candidates_checked) + "," +
           std::to_string(cell.report.counters.superpattern_occurrence_comparisons) + "," +
           std::to_string(cell.report.total_frequent()) + "\n";
  }
  return out;
}

}  // namespace cop
