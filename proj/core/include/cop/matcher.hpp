#pragma once

#include <cstdint>
#include <vector>

#include "cop/pattern.hpp"
#include "cop/series.hpp"

namespace cop {

// 1-based end position of a pattern window inside a keypoint series.
using Pos = std::uint32_t;

// Strictly increasing 1-based end positions.
using OccurrenceList = std::vector<Pos>;

// Up/down encoding of adjacent steps: bit i is 1 when element i rises to
// element i+1, 0 on a fall or a tie. Length is input length minus one.
using BinarySeq = std::vector<std::uint8_t>;

BinarySeq filtration_encode(std::span<const double> values);
BinarySeq filtration_encode(const RankPattern& p);

// All (possibly overlapping) end positions of `pat` in `text`, 1-based,
// in increasing order. Bit-parallel SBNDM2-style scan for patterns up to
// the machine word width, with an exact library-search fallback beyond it.
OccurrenceList binary_match_all(const BinarySeq& text, const BinarySeq& pat);

// Full relative-order check of the window of length |p| ending at `end`:
// every value pair must compare like the corresponding rank pair, and any
// tie inside the window fails.
bool verify_window(const KeypointSeries& k, Pos end, const RankPattern& p);

// Occurrences of p in k via filtration + binary matching + verification.
// Requires |p| >= 2.
OccurrenceList fav_occurrences(const KeypointSeries& k, const RankPattern& p);

// Brute-force sliding-window matcher; the reference for fav_occurrences
// and the support engine of the sliding-window miner. Accepts |p| >= 1.
OccurrenceList oracle_occurrences(const KeypointSeries& k, const RankPattern& p);

}  // namespace cop
