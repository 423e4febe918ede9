#pragma once

#include <stdexcept>
#include <string>

namespace hdc {

// Bad configuration or bad arguments supplied by the caller (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or unusable input data: parse failures, impossible annotations,
// recordings too short to analyse (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Training cannot proceed: single-class input, empty accumulator, single fold
// (CLI exit code 4).
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hdc
