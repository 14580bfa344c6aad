#pragma once

#include <stdexcept>
#include <string>

namespace m2kt {

// Tensor/layer shapes that do not line up.
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

// An operation met or would produce non-finite values.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument beyond shape concerns (counts, ranges, empty inputs).
struct ArgumentError : std::invalid_argument {
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Configuration file or schema problems.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Bytes that cannot be decoded, or content that cannot be encoded.
struct CodecError : std::runtime_error {
  explicit CodecError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unusable signing keys.
struct KeyError : std::runtime_error {
  explicit KeyError(const std::string& what) : std::runtime_error(what) {}
};

// Packet content inconsistent with its own metadata during ingestion.
struct IntegrityError : std::runtime_error {
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// File or socket failures.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace m2kt
