#include "cop/report_io.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace cop {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

ordered_json pattern_json(const RankPattern& p) { return ordered_json(p.ranks()); }

ordered_json occurrences_json(const OccurrenceList& occ) { return ordered_json(occ); }

}  // namespace

std::string format_value(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string report_to_json(const MiningReport& report, int indent) {
  ordered_json j;
  j["config"] = {
      {"algorithm", report.algorithm},
      {"minsup", report.minsup},
      {"prefix", pattern_json(report.prefix)},
      {"keypoints", report.keypoints_enabled},
  };
  j["prefix"] = {
      {"pattern", pattern_json(report.prefix)},
      {"support", report.prefix_support()},
      {"occurrences", occurrences_json(report.prefix_occurrences)},
  };
  ordered_json freq = ordered_json::array();
  for (const auto& [len, patterns] : report.frequent) {
    for (const FrequentPattern& fp : patterns) {
      freq.push_back({
          {"length", len},
          {"pattern", pattern_json(fp.pattern)},
          {"support", fp.support()},
          {"occurrences", occurrences_json(fp.occurrences)},
      });
    }
  }
  j["frequent"] = std::move(freq);
  j["counters"] = {
      {"candidates_checked", report.counters.candidates_checked},
      {"superpattern_occurrence_comparisons",
       report.counters.superpattern_occurrence_comparisons},
  };
  return j.dump(indent) + "\n";
}

std::string report_to_csv(const MiningReport& report) {
  std::string out = "kind,length,pattern,support\n";
  out += "prefix," + std::to_string(report.prefix.size()) + ",\"" +
         report.prefix.to_string() + "\"," + std::to_string(report.prefix_support()) + "\n";
  for (const auto& [len, patterns] : report.frequent) {
    for (const FrequentPattern& fp : patterns) {
      out += "cop," + std::to_string(len) + ",\"" + fp.pattern.to_string() + "\"," +
             std::to_string(fp.support()) + "\n";
    }
  }
  return out;
}

std::string prediction_to_json(const PredictionRun& run, int indent) {
  ordered_json j;
  j["config"] = {
      {"minsup", run.train_report.minsup},
      {"prefix", pattern_json(run.train_report.prefix)},
      {"keypoints", run.train_report.keypoints_enabled},
      {"ratio", run.ratio},
      {"top_k", run.top_k},
      {"horizon", run.horizon},
  };
  ordered_json predicted = ordered_json::array();
  for (const RankPattern& p : run.eval.predicted) {
    ordered_json entry;
    entry["pattern"] = pattern_json(p);
    if (auto it = run.train_support.find(p); it != run.train_support.end()) {
      entry["train_support"] = it->second;
    }
    const auto test_it = run.eval.test_support.find(p);
    entry["test_support"] =
        test_it == run.eval.test_support.end() ? 0 : test_it->second;
    predicted.push_back(std::move(entry));
  }
  j["predicted"] = std::move(predicted);
  ordered_json extensions = ordered_json::array();
  for (const auto& [p, support] : run.eval.test_support) {
    extensions.push_back({{"pattern", pattern_json(p)}, {"support", support}});
  }
  j["test_extensions"] = std::move(extensions);
  j["metrics"] = {
      {"tp", run.eval.tp_mass},
      {"fn", run.eval.fn_mass},
      {"fp", run.eval.fp_count},
      {"precision", round4(run.eval.precision)},
      {"recall", round4(run.eval.recall)},
      {"f1", round4(run.eval.f1)},
  };
  return j.dump(indent) + "\n";
}

}  // namespace cop
