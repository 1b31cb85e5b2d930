#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cop {

// An order-preserving pattern: a permutation of {1..m} where position j
// holds the rank of the j-th element within the window it describes.
class RankPattern {
public:
  RankPattern() = default;
  // Validates that `ranks` is a permutation of {1..m}; throws ContractError.
  explicit RankPattern(std::vector<int> ranks);

  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }
  // 0-based access to the rank at a position.
  int operator[](std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }

  bool operator==(const RankPattern&) const = default;
  auto operator<=>(const RankPattern&) const = default;

  // Textual form used by the CLI and reports, e.g. "(2,1,4,3)".
  std::string to_string() const;
  // Accepts the to_string form with or without parentheses. Throws
  // DataError when the text is not a permutation.
  static RankPattern parse(std::string_view text);

private:
  std::vector<int> ranks_;
};

// Rank order of a window of distinct values: position j gets rank r when
// the value is the r-th smallest. Throws DataError on tied values.
RankPattern relative_order(std::span<const double> values);

// Tie-tolerant variant for hot paths: writes ranks into `out` and
// returns false (leaving `out` unspecified) when the window has ties.
bool try_relative_order(std::span<const double> values, std::vector<int>& out);

// Rank order of the first, resp. last, m-1 positions, renumbered to a
// permutation of {1..m-1}. Throws ContractError for patterns of length 1.
RankPattern prefix_order(const RankPattern& x);
RankPattern suffix_order(const RankPattern& x);

// When aligning a pattern o against its suffix order s, position j+1 is
// "unchanged" if s_j equals o_{j+1} and "changed" otherwise. `lower` is
// the unchanged position with the largest rank in o, `upper` the changed
// position with the smallest. One side may be absent. Positions are
// 1-based in 2..m.
struct BoundaryPositions {
  std::optional<int> lower;
  std::optional<int> upper;
};

// Requires s == suffix_order(o); throws ContractError otherwise.
BoundaryPositions boundary_positions(const RankPattern& o, const RankPattern& s);

// Fuses o with a compatible fusion pattern f (suffix_order(o) ==
// prefix_order(f)) into the length-(m+1) superpatterns that have o as
// prefix order and f as suffix order. Yields two patterns when
// o_1 == f_m and one otherwise. Throws ContractError on incompatibility.
std::vector<RankPattern> fuse(const RankPattern& o, const RankPattern& f);

// True when the rank order of c's first |o| positions equals o.
bool is_prefix_extension(const RankPattern& c, const RankPattern& o);

// Appends one element with rank v (1 <= v <= m+1) to a pattern,
// shifting existing ranks >= v up by one.
RankPattern extend_pattern(const RankPattern& base, int v);

}  // namespace cop
