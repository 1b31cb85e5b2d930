// Command-line front end for co-occurrence order-preserving pattern
// mining: keypoint extraction, mining, trend prediction and an
// instrumented benchmark matrix over the algorithm variants.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cop/bench.hpp"
#include "cop/errors.hpp"
#include "cop/miner.hpp"
#include "cop/predictor.hpp"
#include "cop/report_io.hpp"
#include "cop/series.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitContract = 4;

struct InputConfig {
  std::string path;
  std::string format = "plain";
  std::string column;
};

struct PrefixConfig {
  std::string values;  // raw values, keypoint-extracted then ranked
  std::string ranks;   // rank permutation, used as-is
};

void add_input_options(CLI::App* cmd, InputConfig& in) {
  cmd->add_option("--input", in.path, "input series file")->required();
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"plain", "csv"}))
      ->capture_default_str();
  cmd->add_option("--column", in.column, "CSV column name or 0-based index");
}

void add_prefix_options(CLI::App* cmd, PrefixConfig& prefix) {
  auto* values = cmd->add_option("--prefix", prefix.values,
                                 "prefix as comma-separated raw values");
  auto* ranks = cmd->add_option("--prefix-ranks", prefix.ranks,
                                "prefix as a comma-separated rank permutation");
  values->excludes(ranks);
  ranks->excludes(values);
}

cop::Series load_input(const InputConfig& in) {
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw cop::DataError("cannot open input file '" + in.path + "'");
  if (in.format == "plain") {
    if (!in.column.empty()) {
      throw CLI::ValidationError("--column requires --format csv");
    }
    return cop::load_series_plain(file);
  }
  if (in.column.empty()) {
    throw CLI::ValidationError("--format csv requires --column");
  }
  std::size_t index = 0;
  const auto [ptr, ec] =
      std::from_chars(in.column.data(), in.column.data() + in.column.size(), index);
  if (ec == std::errc{} && ptr == in.column.data() + in.column.size()) {
    return cop::load_series_csv(file, cop::CsvColumn{index});
  }
  return cop::load_series_csv(file, cop::CsvColumn{in.column});
}

cop::Series parse_value_list(const std::string& text) {
  cop::Series out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::istringstream item(token);
    double v = 0.0;
    if (!(item >> v)) throw cop::DataError("invalid value '" + token + "' in prefix");
    out.push_back(v);
  }
  if (out.empty()) throw cop::DataError("empty prefix");
  return out;
}

cop::RankPattern resolve_prefix(const PrefixConfig& prefix, bool use_keypoints) {
  if (!prefix.ranks.empty()) {
    return cop::RankPattern::parse(prefix.ranks);
  }
  if (prefix.values.empty()) {
    throw CLI::ValidationError("one of --prefix / --prefix-ranks is required");
  }
  const cop::Series p = parse_value_list(prefix.values);
  const cop::KeypointSeries q =
      use_keypoints ? cop::extract_keypoints(p) : cop::as_keypoints(p);
  if (q.size() < 2) throw cop::DataError("prefix pattern needs at least two keypoints");
  return cop::relative_order(q.values);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw cop::DataError("cannot open output file '" + out_path + "'");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-occurrence order-preserving pattern miner"};
  app.require_subcommand(1);

  // keypoints
  auto* kp_cmd = app.add_subcommand("keypoints", "extract the keypoint series");
  InputConfig kp_in;
  bool kp_indices = false;
  std::string kp_out;
  add_input_options(kp_cmd, kp_in);
  kp_cmd->add_flag("--indices", kp_indices, "prepend the 1-based source index");
  kp_cmd->add_option("--out", kp_out, "write to a file instead of stdout");

  // mine
  auto* mine_cmd = app.add_subcommand("mine", "mine frequent patterns with the given prefix");
  InputConfig mine_in;
  PrefixConfig mine_prefix;
  std::size_t mine_minsup = 1;
  std::string mine_algo = "copminer";
  bool mine_no_keypoints = false;
  std::string mine_output = "json";
  std::string mine_out;
  add_input_options(mine_cmd, mine_in);
  add_prefix_options(mine_cmd, mine_prefix);
  mine_cmd->add_option("--minsup", mine_minsup, "minimum support")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  mine_cmd->add_option("--algo", mine_algo, "mining algorithm")
      ->check(CLI::IsMember({"copminer", "enum", "noending", "sliding-oracle"}))
      ->capture_default_str();
  mine_cmd->add_flag("--no-keypoints", mine_no_keypoints, "mine the raw series");
  mine_cmd->add_option("--output", mine_output, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  mine_cmd->add_option("--out", mine_out, "write to a file instead of stdout");

  // predict
  auto* pred_cmd = app.add_subcommand("predict", "train/test split trend prediction");
  InputConfig pred_in;
  PrefixConfig pred_prefix;
  std::size_t pred_minsup = 1;
  double pred_ratio = 0.8;
  std::size_t pred_topk = 2;
  std::size_t pred_horizon = 1;
  bool pred_no_keypoints = false;
  std::string pred_out;
  add_input_options(pred_cmd, pred_in);
  add_prefix_options(pred_cmd, pred_prefix);
  pred_cmd->add_option("--minsup", pred_minsup, "training minimum support")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  pred_cmd->add_option("--ratio", pred_ratio, "train fraction of the split")
      ->check(CLI::Validator(
          [](std::string& value) -> std::string {
            const double v = std::strtod(value.c_str(), nullptr);
            if (v > 0.0 && v < 1.0) return {};
            return "ratio must be strictly between 0 and 1";
          },
          "FLOAT in (0,1)"))
      ->capture_default_str();
  pred_cmd->add_option("--top-k", pred_topk, "number of patterns to predict")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  pred_cmd->add_option("--horizon", pred_horizon, "prediction horizon in keypoints")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  pred_cmd->add_flag("--no-keypoints", pred_no_keypoints, "skip keypoint extraction");
  pred_cmd->add_option("--out", pred_out, "write to a file instead of stdout");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "instrumented algorithm/scale matrix");
  InputConfig bench_in;
  PrefixConfig bench_prefix;
  std::size_t bench_minsup = 1;
  std::vector<std::string> bench_algos;
  std::vector<std::size_t> bench_repeats;
  bool bench_no_keypoints = false;
  int bench_samples = 1;
  std::string bench_out;
  add_input_options(bench_cmd, bench_in);
  add_prefix_options(bench_cmd, bench_prefix);
  bench_cmd->add_option("--minsup", bench_minsup, "minimum support")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  bench_cmd->add_option("--algo", bench_algos, "algorithms to run (repeatable)")
      ->check(CLI::IsMember({"copminer", "enum", "noending", "sliding-oracle"}));
  bench_cmd->add_option("--repeat", bench_repeats,
                        "series concatenation factors (repeatable)")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  bench_cmd->add_option("--samples", bench_samples, "timing samples per cell")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  bench_cmd->add_flag("--no-keypoints", bench_no_keypoints, "mine the raw series");
  bench_cmd->add_option("--out", bench_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);

    if (kp_cmd->parsed()) {
      const cop::Series t = load_input(kp_in);
      const cop::KeypointSeries k = cop::extract_keypoints(t);
      std::string text;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (kp_indices) text += std::to_string(k.source_index[i]) + ",";
        text += cop::format_value(k.values[i]) + "\n";
      }
      write_output(text, kp_out);
    } else if (mine_cmd->parsed()) {
      const cop::Series t = load_input(mine_in);
      const bool use_keypoints = !mine_no_keypoints;
      const cop::RankPattern o = resolve_prefix(mine_prefix, use_keypoints);
      const cop::KeypointSeries k =
          use_keypoints ? cop::extract_keypoints(t) : cop::as_keypoints(t);
      cop::MiningReport report =
          cop::mine_pattern(k, o, mine_minsup, cop::algorithm_from_name(mine_algo));
      report.keypoints_enabled = use_keypoints;
      write_output(mine_output == "json" ? cop::report_to_json(report)
                                         : cop::report_to_csv(report),
                   mine_out);
    } else if (pred_cmd->parsed()) {
      const cop::Series t = load_input(pred_in);
      const bool use_keypoints = !pred_no_keypoints;
      const cop::RankPattern o = resolve_prefix(pred_prefix, use_keypoints);
      const cop::PredictionRun run = cop::run_prediction(
          t, o, pred_minsup, pred_ratio, pred_topk, pred_horizon, use_keypoints);
      write_output(cop::prediction_to_json(run), pred_out);
    } else if (bench_cmd->parsed()) {
      const cop::Series t = load_input(bench_in);
      const bool use_keypoints = !bench_no_keypoints;
      const cop::RankPattern o = resolve_prefix(bench_prefix, use_keypoints);
      cop::BenchSpec spec;
      if (bench_algos.empty()) {
        spec.algorithms = {cop::Algorithm::CopMiner, cop::Algorithm::Enum,
                           cop::Algorithm::NoEnding, cop::Algorithm::SlidingOracle};
      } else {
        for (const std::string& name : bench_algos) {
          spec.algorithms.push_back(cop::algorithm_from_name(name));
        }
      }
      spec.repeats = bench_repeats.empty() ? std::vector<std::size_t>{1} : bench_repeats;
      spec.minsup = bench_minsup;
      spec.use_keypoints = use_keypoints;
      spec.samples = bench_samples;
      const std::vector<cop::BenchCell> cells = cop::run_bench(t, o, spec);
      write_output(cop::bench_to_csv(cells), bench_out);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const cop::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const cop::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return 0;
}
