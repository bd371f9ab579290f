#pragma once

#include <stdexcept>
#include <string>

namespace hocolim {

/// Malformed input: unknown ids, broken words, non-chaining maps.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (e.g. tree shape
/// required, pointedness violated, unsupported base).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed the configured cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hocolim
