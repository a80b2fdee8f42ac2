#pragma once

#include <stdexcept>
#include <string>

namespace s1calc {

// Malformed or inconsistent input: dimension mismatch, bad names, k > N, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operator is requested beyond what an N-truncated structure
// determines (e.g. Delta^k with 2k > N).
class UnsupportedTruncation : public InputError {
 public:
  using InputError::InputError;
};

// An internal identity that must hold exactly did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace s1calc
