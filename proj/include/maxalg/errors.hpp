#pragma once

#include <stdexcept>
#include <string>

namespace maxalg {

/// Exact enumeration refused: the instance is too large for the requested
/// limit. Callers should switch to sampling mode or raise the limit.
struct limit_exceeded : std::runtime_error {
  explicit limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-domain input (files, CLI payloads).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace maxalg
