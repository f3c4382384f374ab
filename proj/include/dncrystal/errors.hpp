#pragma once

#include <stdexcept>
#include <string>

namespace dncrystal {

/// Bad arguments: out-of-range colors, malformed elements.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure. Seeing one means a bug, not bad input.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Node budget exhausted during graph generation.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dncrystal
