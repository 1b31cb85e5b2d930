#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cop {

// A plain numeric time series. Values carry whatever unit the dataset uses.
using Series = std::vector<double>;

// A series reduced to its local extrema. source_index[i] is the 1-based
// position of values[i] in the series the keypoints were extracted from.
struct KeypointSeries {
  Series values;
  std::vector<std::size_t> source_index;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }

  // Window of length `len` ending at 1-based position `end`.
  std::span<const double> window(std::size_t end, std::size_t len) const {
    return std::span<const double>(values).subspan(end - len, len);
  }
};

// Keeps the first and last point plus every interior local extremum.
// A point equal to one neighbour and strictly below/above the other
// still counts, so flat-topped peaks keep both of their edge points.
// Series of length 1 or 2 are returned unchanged. Throws DataError on
// NaN or infinite values.
KeypointSeries extract_keypoints(const Series& t);

// Wraps a series as its own keypoint view (identity source indices),
// for pipelines that skip extraction.
KeypointSeries as_keypoints(Series t);

// Column selector for CSV input: a 0-based index or a header name.
using CsvColumn = std::variant<std::size_t, std::string>;

// One value per non-blank line. Throws DataError naming the offending
// line on parse failure, and on an empty result.
Series load_series_plain(std::istream& in);

// One value per row, taken from the selected column. A name selector
// requires a header row; an index selector treats every row as data.
Series load_series_csv(std::istream& in, const CsvColumn& column);

}  // namespace cop
