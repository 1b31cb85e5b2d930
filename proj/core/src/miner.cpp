#include "cop/miner.hpp"

#include <algorithm>
#include <map>

#include "cop/errors.hpp"

namespace cop {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::CopMiner: return "copminer";
    case Algorithm::Enum: return "enum";
    case Algorithm::NoEnding: return "noending";
    case Algorithm::SlidingOracle: return "sliding-oracle";
  }
  return "unknown";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "copminer") return Algorithm::CopMiner;
  if (name == "enum") return Algorithm::Enum;
  if (name == "noending") return Algorithm::NoEnding;
  if (name == "sliding-oracle") return Algorithm::SlidingOracle;
  throw DataError("unknown algorithm '" + name + "'");
}

std::size_t MiningReport::total_frequent() const {
  std::size_t total = 0;
  for (const auto& [len, patterns] : frequent) total += patterns.size();
  return total;
}

bool MiningReport::same_findings(const MiningReport& other) const {
  return prefix == other.prefix && prefix_occurrences == other.prefix_occurrences &&
         frequent == other.frequent;
}

OccurrenceList vop(const RankPattern& o, const RankPattern& s,
                   const OccurrenceList& occ_s, const KeypointSeries& k) {
  const BoundaryPositions bp = boundary_positions(o, s);  // validates s
  const std::size_t m = o.size();
  OccurrenceList out;
  out.reserve(occ_s.size());
  for (Pos c : occ_s) {
    if (c < m) continue;  // no room for the leading element
    const double first = k.values[c - m];
    if (bp.lower && !(first > k.values[c - m + *bp.lower - 1])) continue;
    if (bp.upper && !(first < k.values[c - m + *bp.upper - 1])) continue;
    out.push_back(c);
  }
  return out;
}

namespace {

// Window positions of each rank, so the window's order statistics can be
// read off without re-sorting per anchor.
std::vector<std::uint32_t> positions_by_rank(const RankPattern& p) {
  std::vector<std::uint32_t> pos(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) pos[p[j] - 1] = static_cast<std::uint32_t>(j);
  return pos;
}

// Rank of `next` within (window ending at c of length ctx_len) + next,
// or 0 when `next` ties with a window value. Binary search over the
// window's sorted order, given by rank->position.
int extension_rank(const KeypointSeries& k, Pos c, std::size_t ctx_len,
                   const std::vector<std::uint32_t>& pos_by_rank, double next) {
  const std::size_t start = c - ctx_len;  // 0-based window start
  std::size_t lo = 1, hi = ctx_len;
  while (lo <= hi) {
    const std::size_t mid = (lo + hi) / 2;
    const double val = k.values[start + pos_by_rank[mid - 1]];
    if (val == next) return 0;
    if (val < next) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return static_cast<int>(lo);
}

}  // namespace

FusionTable cfp(const OccurrenceList& anchor_occs, std::size_t base_len,
                const KeypointSeries& k) {
  FusionTable out;
  if (base_len < 2) throw ContractError("fusion patterns need length >= 2");
  if (anchor_occs.empty()) return out;
  const std::size_t sub_len = base_len - 1;
  if (anchor_occs.front() < sub_len) throw ContractError("anchor window out of range");
  // All anchors end windows of one shared relative order.
  const RankPattern sub = relative_order(k.window(anchor_occs.front(), sub_len));
  const std::vector<std::uint32_t> pos_by_rank = positions_by_rank(sub);
  for (Pos c : anchor_occs) {
    if (c >= k.size()) continue;  // series end, nothing to extend with
    const int v = extension_rank(k, c, sub_len, pos_by_rank, k.values[c]);
    if (v == 0) continue;  // tied extension matches no strict pattern
    FusionEntry& entry = out[v];
    if (entry.pattern.empty()) entry.pattern = extend_pattern(sub, v);
    entry.occurrences.push_back(c + 1);
  }
  return out;
}

std::vector<FrequentPattern> css(const KeypointSeries& k, const RankPattern& o,
                                 OccurrenceList occ_o, const FusionTable& fusions,
                                 std::size_t minsup, MiningCounters& counters,
                                 bool use_ending) {
  if (minsup < 1) throw ContractError("minsup must be >= 1");
  std::vector<FrequentPattern> result;
  const std::size_t m = o.size();
  for (const auto& [v, entry] : fusions) {
    if (entry.occurrences.size() >= minsup) {
      const std::vector<RankPattern> fused = fuse(o, entry.pattern);
      counters.candidates_checked += fused.size();
      const bool pair_case = fused.size() == 2;
      OccurrenceList occ_u, occ_v, remaining;
      remaining.reserve(occ_o.size());
      std::size_t i = 0, j = 0;
      while (i < occ_o.size() && j < entry.occurrences.size()) {
        ++counters.superpattern_occurrence_comparisons;
        const Pos go = occ_o[i];
        const Pos gf = entry.occurrences[j];
        if (gf == go + 1) {
          // Matched pair: consumed from both working lists either way.
          if (pair_case) {
            const double begin = k.values[gf - m - 1];
            const double end = k.values[gf - 1];
            if (begin < end) {
              occ_u.push_back(gf);
            } else if (begin > end) {
              occ_v.push_back(gf);
            }
            // begin == end matches no strict superpattern
          } else {
            occ_u.push_back(gf);
          }
          ++i;
          ++j;
        } else if (go + 1 < gf) {
          remaining.push_back(go);
          ++i;
        } else {
          ++j;
        }
      }
      while (i < occ_o.size()) remaining.push_back(occ_o[i++]);
      occ_o = std::move(remaining);
      if (occ_u.size() >= minsup) result.push_back({fused[0], std::move(occ_u)});
      if (pair_case && occ_v.size() >= minsup) result.push_back({fused[1], std::move(occ_v)});
    }
    if (use_ending && occ_o.size() < minsup) break;
  }
  return result;
}

namespace {

void require_minable(const RankPattern& o, std::size_t minsup) {
  if (minsup < 1) throw ContractError("minsup must be >= 1");
  if (o.size() < 2) throw DataError("prefix pattern needs at least two keypoints");
}

MiningReport make_report(Algorithm algo, const RankPattern& o, std::size_t minsup) {
  MiningReport report;
  report.algorithm = algorithm_name(algo);
  report.minsup = minsup;
  report.prefix = o;
  return report;
}

void sort_level(std::vector<FrequentPattern>& level) {
  std::sort(level.begin(), level.end(),
            [](const FrequentPattern& a, const FrequentPattern& b) {
              return a.pattern < b.pattern;
            });
}

// Shared preparation: occurrences of the suffix pattern, then of o itself.
struct Prepared {
  RankPattern s;
  OccurrenceList occ_s;
  OccurrenceList occ_o;
};

Prepared prepare(const KeypointSeries& k, const RankPattern& o) {
  Prepared p;
  p.s = suffix_order(o);
  p.occ_s = p.s.size() >= 2 ? fav_occurrences(k, p.s) : oracle_occurrences(k, p.s);
  p.occ_o = vop(o, p.s, p.occ_s, k);
  return p;
}

MiningReport mine_fusion(const KeypointSeries& k, const RankPattern& o,
                         std::size_t minsup, bool use_ending) {
  MiningReport report =
      make_report(use_ending ? Algorithm::CopMiner : Algorithm::NoEnding, o, minsup);
  Prepared prep = prepare(k, o);
  report.prefix_occurrences = prep.occ_o;

  const std::size_t m = o.size();
  const FusionTable first_fusions = cfp(prep.occ_s, m, k);
  std::vector<FrequentPattern> level =
      css(k, o, prep.occ_o, first_fusions, minsup, report.counters, use_ending);
  std::size_t g = m + 1;
  while (!level.empty()) {
    sort_level(level);
    report.frequent[g] = level;
    std::vector<FrequentPattern> next;
    for (const FrequentPattern& h : report.frequent[g]) {
      const FusionTable fusions = cfp(h.occurrences, g, k);
      std::vector<FrequentPattern> subs =
          css(k, h.pattern, h.occurrences, fusions, minsup, report.counters, use_ending);
      next.insert(next.end(), std::make_move_iterator(subs.begin()),
                  std::make_move_iterator(subs.end()));
    }
    level = std::move(next);
    ++g;
  }
  return report;
}

MiningReport mine_enumeration(const KeypointSeries& k, const RankPattern& o,
                              std::size_t minsup) {
  MiningReport report = make_report(Algorithm::Enum, o, minsup);
  Prepared prep = prepare(k, o);
  report.prefix_occurrences = prep.occ_o;

  std::vector<FrequentPattern> level = {{o, prep.occ_o}};
  std::size_t g = o.size();
  while (!level.empty()) {
    std::vector<FrequentPattern> next;
    for (const FrequentPattern& h : level) {
      const std::vector<std::uint32_t> pos_by_rank = positions_by_rank(h.pattern);
      // Every possible extension rank is a candidate; each is verified by
      // its own pass over the parent's occurrences.
      for (int v = 1; v <= static_cast<int>(g) + 1; ++v) {
        ++report.counters.candidates_checked;
        OccurrenceList occ_w;
        for (Pos c : h.occurrences) {
          if (c >= k.size()) continue;
          ++report.counters.superpattern_occurrence_comparisons;
          if (extension_rank(k, c, g, pos_by_rank, k.values[c]) == v) {
            occ_w.push_back(c + 1);
          }
        }
        if (occ_w.size() >= minsup) {
          next.push_back({extend_pattern(h.pattern, v), std::move(occ_w)});
        }
      }
    }
    if (!next.empty()) {
      sort_level(next);
      report.frequent[g + 1] = next;
    }
    level = std::move(next);
    ++g;
  }
  return report;
}

}  // namespace

MiningReport oracle_mine(const KeypointSeries& k, const RankPattern& o,
                         std::size_t minsup) {
  require_minable(o, minsup);
  MiningReport report = make_report(Algorithm::SlidingOracle, o, minsup);
  report.prefix_occurrences = oracle_occurrences(k, o);

  std::vector<int> scratch;
  const std::size_t n = k.size();
  for (std::size_t g = o.size() + 1; g <= n; ++g) {
    std::map<RankPattern, OccurrenceList> groups;
    for (Pos end = static_cast<Pos>(g); end <= n; ++end) {
      ++report.counters.superpattern_occurrence_comparisons;
      if (!try_relative_order(k.window(end, g), scratch)) continue;
      RankPattern w{std::vector<int>(scratch)};
      if (!is_prefix_extension(w, o)) continue;
      groups[std::move(w)].push_back(end);
    }
    report.counters.candidates_checked += groups.size();
    std::vector<FrequentPattern> level;
    for (auto& [w, occ] : groups) {
      if (occ.size() >= minsup) level.push_back({w, std::move(occ)});
    }
    if (level.empty()) break;
    report.frequent[g] = std::move(level);  // map order is already sorted
  }
  return report;
}

MiningReport mine_pattern(const KeypointSeries& k, const RankPattern& o,
                          std::size_t minsup, Algorithm algo) {
  require_minable(o, minsup);
  switch (algo) {
    case Algorithm::CopMiner: return mine_fusion(k, o, minsup, true);
    case Algorithm::NoEnding: return mine_fusion(k, o, minsup, false);
    case Algorithm::Enum: return mine_enumeration(k, o, minsup);
    case Algorithm::SlidingOracle: return oracle_mine(k, o, minsup);
  }
  throw ContractError("unhandled algorithm");
}

namespace {

MiningReport run_pipeline(const Series& t, const Series& p, std::size_t minsup,
                          const MineOptions& options, Algorithm algo) {
  const KeypointSeries k = options.use_keypoints ? extract_keypoints(t) : as_keypoints(t);
  const KeypointSeries q = options.use_keypoints ? extract_keypoints(p) : as_keypoints(p);
  if (q.size() < 2) throw DataError("prefix pattern needs at least two keypoints");
  const RankPattern o = relative_order(q.values);
  MiningReport report = mine_pattern(k, o, minsup, algo);
  report.keypoints_enabled = options.use_keypoints;
  return report;
}

}  // namespace

MiningReport cop_mine(const Series& t, const Series& p, std::size_t minsup,
                      const MineOptions& options) {
  return run_pipeline(t, p, minsup, options, Algorithm::CopMiner);
}

MiningReport mine_enum(const Series& t, const Series& p, std::size_t minsup,
                       const MineOptions& options) {
  return run_pipeline(t, p, minsup, options, Algorithm::Enum);
}

MiningReport mine_noending(const Series& t, const Series& p, std::size_t minsup,
                           const MineOptions& options) {
  return run_pipeline(t, p, minsup, options, Algorithm::NoEnding);
}

}  // namespace cop
