#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cop/errors.hpp"
#include "cop/pattern.hpp"
#include "helpers.hpp"

using namespace cop;

namespace {

RankPattern rp(std::vector<int> v) { return RankPattern(std::move(v)); }

// Independent rank compression used as the oracle for prefix/suffix order.
RankPattern brute_compress(const std::vector<int>& values) {
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int r = 1;
    for (int v : values) {
      if (v < values[i]) ++r;
    }
    ranks[i] = r;
  }
  return RankPattern(ranks);
}

std::vector<RankPattern> all_permutations(std::size_t m) {
  std::vector<int> ranks(m);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<RankPattern> out;
  do {
    out.push_back(RankPattern(ranks));
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

}  // namespace

TEST_CASE("relative_order ranks a window of distinct values") {
  CHECK(relative_order(std::vector<double>{5, 3, 13, 8}) == rp({2, 1, 4, 3}));
  CHECK(relative_order(std::vector<double>{7}) == rp({1}));
  CHECK_THROWS_AS(relative_order(std::vector<double>{4, 4}), DataError);
}

TEST_CASE("relative_order reproduces the comparison matrix") {
  std::mt19937 rng(testutil::rng_seed());
  for (int iter = 0; iter < 100; ++iter) {
    const Series w = testutil::random_real_series(rng, 2 + iter % 8);
    const RankPattern p = relative_order(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        CHECK((w[i] < w[j]) == (p[i] < p[j]));
      }
    }
  }
}

TEST_CASE("pattern validation and text round-trip") {
  CHECK_THROWS_AS(rp({1, 3}), ContractError);
  CHECK_THROWS_AS(rp({2, 2}), ContractError);
  CHECK(rp({2, 1, 4, 3}).to_string() == "(2,1,4,3)");
  CHECK(RankPattern::parse("(2,1,4,3)") == rp({2, 1, 4, 3}));
  CHECK(RankPattern::parse("2, 1, 4, 3") == rp({2, 1, 4, 3}));
  CHECK_THROWS_AS(RankPattern::parse("(2,2)"), DataError);
  CHECK_THROWS_AS(RankPattern::parse("(1,x)"), DataError);
}

TEST_CASE("prefix and suffix orders") {
  CHECK(suffix_order(rp({2, 1, 4, 3})) == rp({1, 3, 2}));
  CHECK(prefix_order(rp({2, 1, 4, 3})) == rp({2, 1, 3}));
  CHECK(suffix_order(rp({1, 2})) == rp({1}));
  CHECK_THROWS_AS(prefix_order(rp({1})), ContractError);

  std::mt19937 rng(testutil::rng_seed());
  for (int iter = 0; iter < 200; ++iter) {
    const RankPattern x = testutil::random_pattern(rng, 2 + iter % 7);
    std::vector<int> head(x.ranks().begin(), x.ranks().end() - 1);
    std::vector<int> tail(x.ranks().begin() + 1, x.ranks().end());
    CHECK(prefix_order(x) == brute_compress(head));
    CHECK(suffix_order(x) == brute_compress(tail));
  }
}

TEST_CASE("boundary positions") {
  const BoundaryPositions a = boundary_positions(rp({2, 1, 4, 3}), rp({1, 3, 2}));
  CHECK(a.lower == 2);
  CHECK(a.upper == 4);

  const BoundaryPositions b = boundary_positions(rp({4, 1, 3, 2}), rp({1, 3, 2}));
  CHECK(b.lower == 3);
  CHECK_FALSE(b.upper.has_value());

  const BoundaryPositions c = boundary_positions(rp({1, 2}), rp({1}));
  CHECK_FALSE(c.lower.has_value());
  CHECK(c.upper == 2);

  CHECK_THROWS_AS(boundary_positions(rp({2, 1, 4, 3}), rp({2, 1, 3})), ContractError);
}

TEST_CASE("boundary positions partition the tail positions") {
  std::mt19937 rng(testutil::rng_seed());
  for (int iter = 0; iter < 200; ++iter) {
    const RankPattern o = testutil::random_pattern(rng, 2 + iter % 6);
    const RankPattern s = suffix_order(o);
    const BoundaryPositions bp = boundary_positions(o, s);
    CHECK((bp.lower.has_value() || bp.upper.has_value()));
    int unchanged = 0, changed = 0;
    for (std::size_t j = 0; j + 1 < o.size(); ++j) {
      (s[j] == o[j + 1] ? unchanged : changed)++;
    }
    CHECK(bp.lower.has_value() == (unchanged > 0));
    CHECK(bp.upper.has_value() == (changed > 0));
    CHECK(unchanged + changed == static_cast<int>(o.size()) - 1);
  }
}

TEST_CASE("fuse on the worked examples") {
  CHECK(fuse(rp({2, 1, 4, 3}), rp({1, 3, 2, 4})) ==
        std::vector<RankPattern>{rp({2, 1, 4, 3, 5})});
  CHECK(fuse(rp({1, 2}), rp({2, 1})) ==
        std::vector<RankPattern>{rp({1, 3, 2}), rp({2, 3, 1})});
  CHECK(fuse(rp({1, 2}), rp({1, 2})) == std::vector<RankPattern>{rp({1, 2, 3})});
  CHECK_THROWS_AS(fuse(rp({1, 3, 2}), rp({1, 3, 2})), ContractError);
}

TEST_CASE("fuse is complete and exact for all compatible pairs up to m=5") {
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto supers = all_permutations(m + 1);
    for (const RankPattern& o : all_permutations(m)) {
      const RankPattern os = suffix_order(o);
      for (const RankPattern& f : all_permutations(m)) {
        if (prefix_order(f) != os) continue;
        std::vector<RankPattern> expected;
        for (const RankPattern& w : supers) {
          if (prefix_order(w) == o && suffix_order(w) == f) expected.push_back(w);
        }
        std::vector<RankPattern> got = fuse(o, f);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        REQUIRE(got == expected);
      }
    }
  }
}

TEST_CASE("fused outputs keep their prefix and suffix orders at m=6") {
  for (const RankPattern& o : all_permutations(6)) {
    const RankPattern os = suffix_order(o);
    for (const RankPattern& f : all_permutations(6)) {
      if (prefix_order(f) != os) continue;
      for (const RankPattern& w : fuse(o, f)) {
        REQUIRE(w.size() == 7);
        REQUIRE(prefix_order(w) == o);
        REQUIRE(suffix_order(w) == f);
      }
    }
  }
}

TEST_CASE("is_prefix_extension") {
  CHECK(is_prefix_extension(rp({1, 3, 2, 4}), rp({1, 3, 2})));
  CHECK(is_prefix_extension(rp({2, 1, 4, 3, 5}), rp({2, 1, 4, 3})));
  CHECK_FALSE(is_prefix_extension(rp({2, 1}), rp({1, 2})));
  CHECK(is_prefix_extension(rp({2, 1}), rp({2, 1})));
}

TEST_CASE("extend_pattern inserts the new rank at the end") {
  CHECK(extend_pattern(rp({1, 3, 2}), 4) == rp({1, 3, 2, 4}));
  CHECK(extend_pattern(rp({1, 3, 2}), 1) == rp({2, 4, 3, 1}));
  CHECK(extend_pattern(rp({3, 2, 5, 1, 4}), 2) == rp({4, 3, 6, 1, 5, 2}));
  CHECK_THROWS_AS(extend_pattern(rp({1, 2}), 4), ContractError);
}
