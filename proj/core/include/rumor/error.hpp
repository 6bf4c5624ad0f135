#pragma once

#include <stdexcept>

namespace rumor {

/// Raised for malformed specs and out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation needs analytic tail data the distribution does
/// not carry (e.g. a transform over a heavy-tailed family).
class TailDataUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the enumeration oracle when the configuration count exceeds its
/// guard.
class EnumerationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace rumor
