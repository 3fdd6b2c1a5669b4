#pragma once

#include <stdexcept>
#include <string>

namespace toep {

// Malformed request shape: unknown ops, wrong JSON types, unparsable values.
// CLI exit code 2.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside an operation's domain. CLI exit code 3.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed: an identity that should hold did not,
// or a computation reached a state its contract rules out. CLI exit code 1.
struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace toep
