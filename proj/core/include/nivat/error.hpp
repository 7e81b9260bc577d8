#pragma once

#include <stdexcept>
#include <string>

namespace nivat {

/// Library-wide error type. Thrown for violated preconditions and
/// malformed inputs; analysis "negative" outcomes are plain values.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nivat
