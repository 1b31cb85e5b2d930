#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "cop/matcher.hpp"
#include "cop/pattern.hpp"
#include "cop/series.hpp"

namespace testutil {

// Seed for randomized fixtures, overridable through COP_SEED.
inline unsigned rng_seed(unsigned fallback = 20240811u) {
  if (const char* env = std::getenv("COP_SEED")) {
    return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  return fallback;
}

// The worked 20-point series and its keypoint reduction used throughout
// the unit fixtures.
inline cop::Series sample_series() {
  return {16, 8, 11, 10, 12, 16, 17, 13, 20, 18, 21, 22, 18, 14, 21, 24, 23, 27, 25, 28};
}

inline cop::Series sample_keypoints() {
  return {16, 8, 11, 10, 17, 13, 20, 18, 22, 14, 24, 23, 27, 25, 28};
}

inline cop::Series random_real_series(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  cop::Series out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

// Small integer range so ties and plateaus show up regularly.
inline cop::Series random_int_series(std::mt19937& rng, std::size_t n, int hi = 12) {
  std::uniform_int_distribution<int> dist(0, hi);
  cop::Series out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

inline cop::RankPattern random_pattern(std::mt19937& rng, std::size_t m) {
  std::vector<int> ranks(m);
  for (std::size_t i = 0; i < m; ++i) ranks[i] = static_cast<int>(i + 1);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return cop::RankPattern(ranks);
}

// A value stream realizing the four length-6 extensions of (3,2,5,1,4)
// as disjoint blocks. Neighbouring blocks are separated by equal-value
// pairs, so no pattern window can straddle a block boundary and each
// block contributes exactly one occurrence of its extension. Every point
// is a local extremum, so keypoint extraction leaves the stream intact.
// The counts give the support of (4,3,6,2,5,1), (4,3,6,1,5,2),
// (4,2,6,1,5,3) and (3,2,6,1,5,4) in that order.
inline cop::Series extension_block_stream(std::size_t n1, std::size_t n2,
                                          std::size_t n3, std::size_t n4) {
  const std::vector<std::vector<double>> blocks = {
      {60, 30, 80, 20, 70, 10},  // (4,3,6,2,5,1)
      {60, 30, 80, 10, 70, 20},  // (4,3,6,1,5,2)
      {60, 20, 80, 10, 70, 30},  // (4,2,6,1,5,3)
      {46, 20, 80, 10, 70, 48},  // (3,2,6,1,5,4)
  };
  cop::Series out;
  auto emit = [&](std::size_t which, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!out.empty()) {
        // Separator pair strictly between the surrounding block ends.
        const double sep = which == 3 ? 40 : 50;
        out.push_back(sep);
        out.push_back(sep);
      }
      out.insert(out.end(), blocks[which].begin(), blocks[which].end());
      if (which == 3) {
        // This block ends high (48); step back down through another
        // separator pair so any block may follow.
        out.push_back(55);
        out.push_back(55);
        out.push_back(60);
        out.push_back(10);
      }
    }
  };
  emit(0, n1);
  emit(1, n2);
  emit(2, n3);
  emit(3, n4);
  return out;
}

// Reference scan for the binary matcher.
inline cop::OccurrenceList naive_binary_match(const cop::BinarySeq& text,
                                              const cop::BinarySeq& pat) {
  cop::OccurrenceList out;
  if (pat.empty() || pat.size() > text.size()) return out;
  for (std::size_t end = pat.size(); end <= text.size(); ++end) {
    bool ok = true;
    for (std::size_t j = 0; j < pat.size(); ++j) {
      if (text[end - pat.size() + j] != pat[j]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<cop::Pos>(end));
  }
  return out;
}

}  // namespace testutil
