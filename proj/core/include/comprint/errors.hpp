#pragma once

#include <stdexcept>
#include <string>

namespace comprint {

/// Bad configuration or arguments. CLI exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A required upstream artifact (manifest, checkpoint, comprint, ...) is
/// missing or unreadable. CLI exit code 2.
struct ArtifactError : std::runtime_error {
  explicit ArtifactError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Data violates a contract (undecodable image, shape mismatch, NaN loss).
/// CLI exit code 3.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace comprint
