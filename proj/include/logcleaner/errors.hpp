#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logcleaner {

// File system and input problems. The CLI maps these to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A line in an input file that cannot be decoded.
class ParseError : public IoError {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& reason)
      : IoError(file + ":" + std::to_string(line) + ": " + reason) {}
};

// Structurally valid input whose content breaks a semantic requirement
// (unreachable FSM state, unknown template in a ground truth, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid option values or combinations. The CLI maps these to exit code 3.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logcleaner
