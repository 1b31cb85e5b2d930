#pragma once

#include <string>

#include "cop/miner.hpp"
#include "cop/predictor.hpp"

namespace cop {

// Shortest round-trip decimal form of a value ("16", "0.25", ...).
std::string format_value(double v);

// Stable JSON form of a mining report. Field names are part of the
// public format; see the README format reference.
std::string report_to_json(const MiningReport& report, int indent = 2);

// CSV form: one frequent pattern per row (length, pattern, support),
// prefix row included and marked.
std::string report_to_csv(const MiningReport& report);

std::string prediction_to_json(const PredictionRun& run, int indent = 2);

}  // namespace cop
