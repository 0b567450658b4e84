#pragma once

#include <stdexcept>
#include <string>

namespace lad {

/// Malformed input file (bad arity, unparsable number, empty file).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Data violates a stage precondition (conflicting rows, bad split sizes).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration (thresholds, empty pattern families).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Model file missing, corrupt, or incompatible with the input schema.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lad
