#include "cop/matcher.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "cop/errors.hpp"

namespace cop {

BinarySeq filtration_encode(std::span<const double> values) {
  if (values.size() < 2) throw ContractError("filtration needs at least two elements");
  BinarySeq bits(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    bits[i] = values[i] < values[i + 1] ? 1 : 0;  // ties encode as 0
  }
  return bits;
}

BinarySeq filtration_encode(const RankPattern& p) {
  if (p.size() < 2) throw ContractError("filtration needs at least two elements");
  BinarySeq bits(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    bits[i] = p[i] < p[i + 1] ? 1 : 0;
  }
  return bits;
}

namespace {

constexpr std::size_t kWordBits = 64;

// Overlapping library search; used when the pattern exceeds the word width.
OccurrenceList match_long(const BinarySeq& text, const BinarySeq& pat) {
  OccurrenceList out;
  const std::boyer_moore_horspool_searcher searcher(pat.begin(), pat.end());
  auto it = text.begin();
  while (true) {
    it = std::search(it, text.end(), searcher);
    if (it == text.end()) break;
    out.push_back(static_cast<Pos>(it - text.begin() + pat.size()));
    ++it;
  }
  return out;
}

// SBNDM2-style backward bit-parallel scan. The state word D, after r
// characters read right-to-left from the window end, has bit b set iff
// those r characters equal the pattern factor starting at position
// m-1-b. Bit m-1 therefore flags a pattern prefix, and a prefix of
// length m is a full match. The first two characters are consumed in one
// step; a dead 2-gram allows an m-1 skip because no occurrence can span
// a 2-gram that appears nowhere in the pattern.
OccurrenceList match_bitparallel(const BinarySeq& text, const BinarySeq& pat) {
  const std::size_t n = text.size();
  const std::size_t m = pat.size();
  std::uint64_t masks[2] = {0, 0};
  for (std::size_t j = 0; j < m; ++j) {
    masks[pat[j]] |= std::uint64_t{1} << (m - 1 - j);
  }
  const std::uint64_t prefix_bit = std::uint64_t{1} << (m - 1);

  OccurrenceList out;
  std::size_t i = m - 1;  // 0-based end of the current window
  while (i < n) {
    const std::uint64_t d1 = masks[text[i]];
    std::uint64_t d = (d1 << 1) & masks[text[i - 1]];
    if (d == 0) {
      i += m - 1;
      continue;
    }
    // A length-1 prefix sighting at the window end is consumed by the
    // unrolled entry, so fold it into the shift before scanning on.
    std::size_t shift = (d1 & prefix_bit) ? m - 1 : m;
    std::size_t r = 2;
    while (true) {
      if (d & prefix_bit) {
        if (r == m) {
          out.push_back(static_cast<Pos>(i + 1));
        } else {
          shift = m - r;
        }
      }
      if (r == m) break;
      d = (d << 1) & masks[text[i - r]];
      ++r;
      if (d == 0) break;
    }
    i += shift;
  }
  return out;
}

}  // namespace

OccurrenceList binary_match_all(const BinarySeq& text, const BinarySeq& pat) {
  if (pat.empty()) throw ContractError("empty binary pattern");
  if (pat.size() > text.size()) return {};
  if (pat.size() == 1) {
    OccurrenceList out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == pat[0]) out.push_back(static_cast<Pos>(i + 1));
    }
    return out;
  }
  if (pat.size() > kWordBits) return match_long(text, pat);
  return match_bitparallel(text, pat);
}

namespace {

// Tie-rejecting rank check of one window against a pattern, with caller
// owned scratch to keep the candidate-verification loop allocation-free.
struct WindowVerifier {
  std::vector<std::uint32_t> idx;
  std::vector<int> ranks;

  bool matches(std::span<const double> window, const RankPattern& p) {
    const std::size_t m = window.size();
    idx.resize(m);
    for (std::size_t j = 0; j < m; ++j) idx[j] = static_cast<std::uint32_t>(j);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return window[a] < window[b];
    });
    ranks.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      if (r > 0 && window[idx[r]] == window[idx[r - 1]]) return false;
      ranks[idx[r]] = static_cast<int>(r + 1);
    }
    return ranks == p.ranks();
  }
};

}  // namespace

bool verify_window(const KeypointSeries& k, Pos end, const RankPattern& p) {
  if (p.empty()) throw ContractError("empty pattern");
  if (end < p.size() || end > k.size()) throw ContractError("window out of range");
  if (p.size() == 1) return true;
  WindowVerifier v;
  return v.matches(k.window(end, p.size()), p);
}

OccurrenceList fav_occurrences(const KeypointSeries& k, const RankPattern& p) {
  if (p.size() < 2) throw ContractError("fav requires patterns of length >= 2");
  if (k.size() < p.size()) return {};
  const BinarySeq b = filtration_encode(std::span<const double>(k.values));
  const BinarySeq d = filtration_encode(p);
  const OccurrenceList candidates = binary_match_all(b, d);
  OccurrenceList out;
  WindowVerifier v;
  for (Pos j : candidates) {
    const Pos end = j + 1;  // binary end index -> series end index
    if (v.matches(k.window(end, p.size()), p)) out.push_back(end);
  }
  return out;
}

OccurrenceList oracle_occurrences(const KeypointSeries& k, const RankPattern& p) {
  if (p.empty()) throw ContractError("empty pattern");
  OccurrenceList out;
  if (k.size() < p.size()) return out;
  if (p.size() == 1) {
    out.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = static_cast<Pos>(i + 1);
    return out;
  }
  WindowVerifier v;
  for (Pos end = static_cast<Pos>(p.size()); end <= k.size(); ++end) {
    if (v.matches(k.window(end, p.size()), p)) out.push_back(end);
  }
  return out;
}

}  // namespace cop
