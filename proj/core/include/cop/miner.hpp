#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cop/matcher.hpp"
#include "cop/pattern.hpp"
#include "cop/series.hpp"

namespace cop {

// One extension of a pattern: the fused pattern for extension rank v and
// the end positions where that extension was observed.
struct FusionEntry {
  RankPattern pattern;
  OccurrenceList occurrences;
};

// Extension rank v -> fusion entry. Occurrence lists of distinct entries
// are disjoint: each extension position realizes exactly one rank.
using FusionTable = std::map<int, FusionEntry>;

struct MiningCounters {
  std::uint64_t candidates_checked = 0;
  std::uint64_t superpattern_occurrence_comparisons = 0;
};

struct FrequentPattern {
  RankPattern pattern;
  OccurrenceList occurrences;
  std::size_t support() const { return occurrences.size(); }
  bool operator==(const FrequentPattern&) const = default;
};

enum class Algorithm { CopMiner, Enum, NoEnding, SlidingOracle };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);  // throws DataError

struct MiningReport {
  std::string algorithm;
  std::size_t minsup = 0;
  bool keypoints_enabled = true;
  RankPattern prefix;                  // the user pattern o, reported separately
  OccurrenceList prefix_occurrences;   // its own occurrences in k
  // Frequent patterns extending the prefix, grouped by length and sorted
  // lexicographically within a length.
  std::map<std::size_t, std::vector<FrequentPattern>> frequent;
  MiningCounters counters;

  std::size_t prefix_support() const { return prefix_occurrences.size(); }
  std::size_t total_frequent() const;
  // Frequent-set payload (prefix + patterns + occurrences), ignoring the
  // algorithm tag and counters.
  bool same_findings(const MiningReport& other) const;
};

// Keeps the suffix-pattern occurrences whose window can be extended one
// step to the left into an occurrence of o, using only the two boundary
// comparisons. Requires s == suffix_order(o).
OccurrenceList vop(const RankPattern& o, const RankPattern& s,
                   const OccurrenceList& occ_s, const KeypointSeries& k);

// For each anchor end c, ranks the next value k_{c+1} inside the window
// of length base_len ending at c+1 (binary search over the anchor
// window's order statistics) and buckets <c+1> under that rank. Anchors
// must all end windows with one common relative order of length
// base_len - 1. Tied extensions and series-end anchors contribute nothing.
FusionTable cfp(const OccurrenceList& anchor_occs, std::size_t base_len,
                const KeypointSeries& k);

// Fuses o with each sufficiently supported fusion entry and derives
// superpattern occurrences by pairing occurrence lists on gf == go + 1.
// Matched positions are consumed from working copies, and with
// `use_ending` the remaining entries are dropped as soon as fewer than
// minsup occurrences of o are left to pair.
std::vector<FrequentPattern> css(const KeypointSeries& k, const RankPattern& o,
                                 OccurrenceList occ_o, const FusionTable& fusions,
                                 std::size_t minsup, MiningCounters& counters,
                                 bool use_ending = true);

// Mining engines over an already extracted keypoint series and prefix
// pattern. All four produce the same frequent sets; they differ in how
// candidates are generated and counted.
MiningReport mine_pattern(const KeypointSeries& k, const RankPattern& o,
                          std::size_t minsup, Algorithm algo = Algorithm::CopMiner);

// Direct window enumeration, independent of the fusion machinery.
MiningReport oracle_mine(const KeypointSeries& k, const RankPattern& o,
                         std::size_t minsup);

struct MineOptions {
  bool use_keypoints = true;  // off = mine the raw series
};

// Full pipeline: extract keypoints of t and p, rank p, mine.
// Throws DataError when p has fewer than two keypoints or tied values.
MiningReport cop_mine(const Series& t, const Series& p, std::size_t minsup,
                      const MineOptions& options = {});
MiningReport mine_enum(const Series& t, const Series& p, std::size_t minsup,
                       const MineOptions& options = {});
MiningReport mine_noending(const Series& t, const Series& p, std::size_t minsup,
                           const MineOptions& options = {});

}  // namespace cop
