#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgm {

/// Invalid schema definition or a label value outside its domain.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Estimation preconditions not met (no vertices, or no edges).
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid generation or augmentation configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File and parse failures; message names the path and line when known.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge drawing exhausted its attempt budget before reaching the target
/// edge count. Carries the rejection breakdown for diagnosis: the target
/// is too close to the feasible maximum, or the drawn category pairs keep
/// landing on starved vertex pools.
class SaturationError : public std::runtime_error {
 public:
  SaturationError(const std::string& message, std::uint64_t attempts,
                  std::uint64_t rejected_self, std::uint64_t rejected_duplicate,
                  std::uint64_t rejected_empty_pool)
      : std::runtime_error(message),
        attempts(attempts),
        rejected_self(rejected_self),
        rejected_duplicate(rejected_duplicate),
        rejected_empty_pool(rejected_empty_pool) {}

  std::uint64_t attempts = 0;
  std::uint64_t rejected_self = 0;
  std::uint64_t rejected_duplicate = 0;
  std::uint64_t rejected_empty_pool = 0;
};

}  // namespace pgm
