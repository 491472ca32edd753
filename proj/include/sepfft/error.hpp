#pragma once

#include <stdexcept>

namespace sepfft {

// Raised when an argument violates a documented precondition (bad length,
// index out of range, mismatched plan).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a request exceeds a configured size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace sepfft
