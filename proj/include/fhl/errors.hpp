// Error types shared across the library. Numeric failures (quadrature or
// power-iteration nonconvergence, infinite transformed mass) are kept apart
// from configuration errors so the CLI can map them to distinct exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace fhl {

// A numerical procedure failed to reach its tolerance or produced a
// non-finite quantity (CLI exit code 3).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-facing configuration: malformed JSON, out-of-range parameters,
// unknown keys (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fhl
