#pragma once

#include <stdexcept>
#include <string>

namespace cop {

// Raised for malformed or unusable input data (unparsable files, tied
// values where a strict rank order is required, prefixes that are too
// short after keypoint extraction, ...).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a caller violates an API precondition, e.g. passing a
// suffix pattern that is not the suffix order of its parent pattern.
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cop
