#include "cop/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cop/errors.hpp"

namespace cop {

namespace {

bool is_permutation_1m(const std::vector<int>& ranks) {
  std::vector<bool> seen(ranks.size(), false);
  for (int r : ranks) {
    if (r < 1 || static_cast<std::size_t>(r) > ranks.size() || seen[r - 1]) return false;
    seen[r - 1] = true;
  }
  return true;
}

// Rank-compress a window of distinct ints into a permutation of {1..m}.
std::vector<int> compress(std::span<const int> values) {
  const std::size_t m = values.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(m);
  for (std::size_t r = 0; r < m; ++r) ranks[idx[r]] = static_cast<int>(r + 1);
  return ranks;
}

}  // namespace

RankPattern::RankPattern(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  if (!is_permutation_1m(ranks_)) {
    throw ContractError("rank pattern is not a permutation of 1..m");
  }
}

std::string RankPattern::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ranks_[i]);
  }
  out += ')';
  return out;
}

RankPattern RankPattern::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '(')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ')')) text.remove_suffix(1);
  std::vector<int> ranks;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int r = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), r);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DataError("invalid rank '" + std::string(token) + "' in pattern");
    }
    ranks.push_back(r);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  if (!is_permutation_1m(ranks)) {
    throw DataError("pattern is not a permutation of 1..m");
  }
  return RankPattern(std::move(ranks));
}

bool try_relative_order(std::span<const double> values, std::vector<int>& out) {
  const std::size_t m = values.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  out.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (r > 0 && values[idx[r]] == values[idx[r - 1]]) return false;
    out[idx[r]] = static_cast<int>(r + 1);
  }
  return true;
}

RankPattern relative_order(std::span<const double> values) {
  std::vector<int> ranks;
  if (!try_relative_order(values, ranks)) {
    throw DataError("tied values have no strict rank order");
  }
  return RankPattern(std::move(ranks));
}

RankPattern prefix_order(const RankPattern& x) {
  if (x.size() < 2) throw ContractError("prefix order undefined for length-1 patterns");
  return RankPattern(compress(std::span<const int>(x.ranks()).first(x.size() - 1)));
}

RankPattern suffix_order(const RankPattern& x) {
  if (x.size() < 2) throw ContractError("suffix order undefined for length-1 patterns");
  return RankPattern(compress(std::span<const int>(x.ranks()).last(x.size() - 1)));
}

BoundaryPositions boundary_positions(const RankPattern& o, const RankPattern& s) {
  if (o.size() != s.size() + 1 || suffix_order(o) != s) {
    throw ContractError("s must be the suffix order of o");
  }
  BoundaryPositions bp;
  int lower_rank = 0;
  int upper_rank = static_cast<int>(o.size()) + 1;
  for (std::size_t j = 0; j + 1 < o.size(); ++j) {
    const int pos = static_cast<int>(j) + 2;  // 1-based position in o
    if (s[j] == o[j + 1]) {
      if (o[j + 1] > lower_rank) {
        lower_rank = o[j + 1];
        bp.lower = pos;
      }
    } else if (o[j + 1] < upper_rank) {
      upper_rank = o[j + 1];
      bp.upper = pos;
    }
  }
  return bp;
}

std::vector<RankPattern> fuse(const RankPattern& o, const RankPattern& f) {
  const std::size_t m = o.size();
  if (f.size() != m || suffix_order(o) != prefix_order(f)) {
    throw ContractError("patterns are not fusion-compatible");
  }
  const int o1 = o[0];
  const int fm = f[m - 1];
  if (o1 == fm) {
    // Both relative placements of the new boundary element are possible;
    // the shared middle shifts every rank above o1 up by one.
    std::vector<int> u(m + 1), v(m + 1);
    u[0] = o1;
    u[m] = o1 + 1;
    v[0] = o1 + 1;
    v[m] = o1;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const int r = f[i] < o1 ? f[i] : f[i] + 1;
      u[i + 1] = r;
      v[i + 1] = r;
    }
    return {RankPattern(std::move(u)), RankPattern(std::move(v))};
  }
  std::vector<int> u(m + 1);
  if (o1 < fm) {
    u[0] = o1;
    for (std::size_t i = 0; i < m; ++i) u[i + 1] = f[i] < o1 ? f[i] : f[i] + 1;
  } else {
    u[0] = o1 + 1;
    for (std::size_t i = 0; i < m; ++i) u[i + 1] = f[i] <= o1 ? f[i] : f[i] + 1;
  }
  return {RankPattern(std::move(u))};
}

bool is_prefix_extension(const RankPattern& c, const RankPattern& o) {
  if (c.size() < o.size() || o.empty()) return false;
  return RankPattern(compress(std::span<const int>(c.ranks()).first(o.size()))) == o;
}

RankPattern extend_pattern(const RankPattern& base, int v) {
  const int g = static_cast<int>(base.size());
  if (v < 1 || v > g + 1) throw ContractError("extension rank out of range");
  std::vector<int> out(base.size() + 1);
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] < v ? base[i] : base[i] + 1;
  out[base.size()] = v;
  return RankPattern(std::move(out));
}

}  // namespace cop
