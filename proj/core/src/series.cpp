#include "cop/series.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <string>

#include "cop/errors.hpp"

namespace cop {

namespace {

bool is_local_extremum(double prev, double cur, double next) {
  const bool local_min = (cur < prev && cur <= next) || (cur <= prev && cur < next);
  const bool local_max = (cur > prev && cur >= next) || (cur >= prev && cur > next);
  return local_min || local_max;
}

void require_finite(const Series& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i])) {
      throw DataError("non-finite value at position " + std::to_string(i + 1));
    }
  }
}

}  // namespace

KeypointSeries extract_keypoints(const Series& t) {
  require_finite(t);
  KeypointSeries k;
  if (t.empty()) return k;
  if (t.size() <= 2) {
    k.values = t;
    k.source_index.resize(t.size());
    std::iota(k.source_index.begin(), k.source_index.end(), std::size_t{1});
    return k;
  }
  k.values.reserve(t.size());
  k.source_index.reserve(t.size());
  k.values.push_back(t.front());
  k.source_index.push_back(1);
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (is_local_extremum(t[i - 1], t[i], t[i + 1])) {
      k.values.push_back(t[i]);
      k.source_index.push_back(i + 1);
    }
  }
  k.values.push_back(t.back());
  k.source_index.push_back(t.size());
  return k;
}

KeypointSeries as_keypoints(Series t) {
  require_finite(t);
  KeypointSeries k;
  k.source_index.resize(t.size());
  std::iota(k.source_index.begin(), k.source_index.end(), std::size_t{1});
  k.values = std::move(t);
  return k;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

double parse_value(std::string_view token, std::size_t line_no) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw DataError("unparsable numeric value '" + std::string(token) + "' at line " +
                    std::to_string(line_no));
  }
  if (!std::isfinite(v)) {
    throw DataError("non-finite value at line " + std::to_string(line_no));
  }
  return v;
}

std::vector<std::string_view> split_csv_row(std::string_view row) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(row.substr(start)));
      break;
    }
    cells.push_back(trim(row.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Series load_series_plain(std::istream& in) {
  Series out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view token = trim(line);
    if (token.empty()) continue;
    out.push_back(parse_value(token, line_no));
  }
  if (out.empty()) throw DataError("input contains no values");
  return out;
}

Series load_series_csv(std::istream& in, const CsvColumn& column) {
  Series out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t col = 0;
  bool col_known = std::holds_alternative<std::size_t>(column);
  if (col_known) col = std::get<std::size_t>(column);
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto cells = split_csv_row(row);
    if (!col_known) {
      const auto& name = std::get<std::string>(column);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == name) {
          col = i;
          col_known = true;
          break;
        }
      }
      if (!col_known) {
        throw DataError("column '" + name + "' not found in header at line " +
                        std::to_string(line_no));
      }
      continue;  // header row consumed
    }
    if (col >= cells.size()) {
      throw DataError("row at line " + std::to_string(line_no) + " has no column " +
                      std::to_string(col));
    }
    out.push_back(parse_value(cells[col], line_no));
  }
  if (out.empty()) throw DataError("input contains no values");
  return out;
}

}  // namespace cop
