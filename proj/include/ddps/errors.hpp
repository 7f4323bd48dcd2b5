#pragma once

#include <stdexcept>
#include <string>

namespace ddps {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Spatial-shape or channel-count violations (non-divisible dims, mismatches).
struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Out-of-range labels, invalid probabilities, bad argument values.
struct ValueError : Error {
  explicit ValueError(const std::string& msg) : Error(msg) {}
};

// A (x_t, x_0, t) triple with zero forward probability; indicates the caller
// fed states that the diffusion process cannot produce.
struct ImpossibleStateError : Error {
  explicit ImpossibleStateError(const std::string& msg) : Error(msg) {}
};

// File could not be read/written.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Bad magic, unsupported version, truncated or malformed file contents.
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Inconsistent or unusable run configuration.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Scene generator could not satisfy the spec's placement rules.
struct PlacementError : Error {
  explicit PlacementError(const std::string& msg) : Error(msg) {}
};

// Training loss became non-finite.
struct DivergenceError : Error {
  explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace ddps
