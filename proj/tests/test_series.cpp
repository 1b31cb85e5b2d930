#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "cop/errors.hpp"
#include "cop/series.hpp"
#include "helpers.hpp"

using namespace cop;

namespace {

// Replays the keypoint definition directly against the original series.
bool is_extremum_by_definition(const Series& t, std::size_t i) {
  const double prev = t[i - 1], cur = t[i], next = t[i + 1];
  const bool mn = (cur < prev && cur <= next) || (cur <= prev && cur < next);
  const bool mx = (cur > prev && cur >= next) || (cur >= prev && cur > next);
  return mn || mx;
}

}  // namespace

TEST_CASE("extract_keypoints reduces the sample series to its extrema") {
  const KeypointSeries k = extract_keypoints(testutil::sample_series());
  CHECK(k.values == testutil::sample_keypoints());
  CHECK(k.source_index ==
        std::vector<std::size_t>{1, 2, 3, 4, 7, 8, 9, 10, 12, 14, 16, 17, 18, 19, 20});
}

TEST_CASE("extract_keypoints on the short prefix series") {
  const KeypointSeries k = extract_keypoints({5, 3, 7, 13, 8});
  CHECK(k.values == Series{5, 3, 13, 8});
  CHECK(k.source_index == std::vector<std::size_t>{1, 2, 4, 5});
}

TEST_CASE("monotone interiors drop, endpoints stay") {
  const KeypointSeries k = extract_keypoints({1, 2, 3, 4});
  CHECK(k.values == Series{1, 4});
  CHECK(k.source_index == std::vector<std::size_t>{1, 4});
}

TEST_CASE("flat-topped peaks keep both edge points") {
  const KeypointSeries k = extract_keypoints({1, 2, 2, 1});
  CHECK(k.values == Series{1, 2, 2, 1});
}

TEST_CASE("series of length one or two come back unchanged") {
  CHECK(extract_keypoints({7}).values == Series{7});
  CHECK(extract_keypoints({7, 3}).values == Series{7, 3});
  CHECK(extract_keypoints({7, 3}).source_index == std::vector<std::size_t>{1, 2});
}

TEST_CASE("non-finite input is rejected") {
  CHECK_THROWS_AS(extract_keypoints({1.0, std::nan(""), 2.0}), DataError);
  CHECK_THROWS_AS(extract_keypoints({std::numeric_limits<double>::infinity()}), DataError);
}

TEST_CASE("keypoint extraction invariants on random series") {
  std::mt19937 rng(testutil::rng_seed());
  for (int iter = 0; iter < 200; ++iter) {
    const Series t = iter % 2 == 0 ? testutil::random_real_series(rng, 3 + iter % 60)
                                   : testutil::random_int_series(rng, 3 + iter % 60);
    const KeypointSeries k = extract_keypoints(t);
    REQUIRE(k.size() >= 2);
    CHECK(k.size() <= t.size());
    CHECK(k.source_index.front() == 1);
    CHECK(k.source_index.back() == t.size());
    // Round-trip indexing.
    for (std::size_t i = 0; i < k.size(); ++i) {
      CHECK(k.values[i] == t[k.source_index[i] - 1]);
    }
    // Soundness both ways: kept interior points satisfy the definition,
    // dropped interior points do not.
    std::vector<bool> kept(t.size() + 1, false);
    for (std::size_t pos : k.source_index) kept[pos] = true;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
      CHECK(kept[i + 1] == is_extremum_by_definition(t, i));
    }
    CHECK(std::is_sorted(k.source_index.begin(), k.source_index.end()));
  }
}

TEST_CASE("plain loader parses one value per line") {
  std::istringstream in("16\n8\n11\n");
  CHECK(load_series_plain(in) == Series{16, 8, 11});
}

TEST_CASE("plain loader skips blanks and handles crlf") {
  std::istringstream in("1.5\r\n\r\n  2.5 \n\n-3\n");
  CHECK(load_series_plain(in) == Series{1.5, 2.5, -3});
}

TEST_CASE("plain loader reports the failing line") {
  std::istringstream in("16\nabc\n");
  CHECK_THROWS_WITH_AS(load_series_plain(in), doctest::Contains("line 2"), DataError);
}

TEST_CASE("plain loader rejects empty input") {
  std::istringstream in("\n\n");
  CHECK_THROWS_AS(load_series_plain(in), DataError);
}

TEST_CASE("csv loader projects a named column") {
  std::istringstream in("date,close\nd1,5\nd2,3\n");
  CHECK(load_series_csv(in, CsvColumn{std::string("close")}) == Series{5, 3});
}

TEST_CASE("csv loader with a numeric column index has no header") {
  std::istringstream in("1,10\n2,20\n");
  CHECK(load_series_csv(in, CsvColumn{std::size_t{1}}) == Series{10, 20});
}

TEST_CASE("csv loader errors") {
  std::istringstream missing("a,b\n1,2\n");
  CHECK_THROWS_AS(load_series_csv(missing, CsvColumn{std::string("close")}), DataError);
  std::istringstream ragged("1,5\n2\n");
  CHECK_THROWS_WITH_AS(load_series_csv(ragged, CsvColumn{std::size_t{1}}),
                       doctest::Contains("line 2"), DataError);
  std::istringstream bad("close\n1\nzz\n");
  CHECK_THROWS_WITH_AS(load_series_csv(bad, CsvColumn{std::string("close")}),
                       doctest::Contains("line 3"), DataError);
}
