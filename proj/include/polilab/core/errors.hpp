#pragma once

#include <stdexcept>
#include <string>

namespace polilab {

// Configuration / input validation problems. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad call arguments (self-pair link score, candidate already present, ...).
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed persisted data; message carries file path and line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Persisted schema_version does not match what this build reads.
struct VersionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/vector dimensionality mismatch.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Divergence, NaN losses, non-finite gradients. CLI exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Artifact checksum does not match its manifest entry.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polilab
