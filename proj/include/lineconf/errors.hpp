#pragma once

#include <stdexcept>
#include <string>

namespace lineconf {

// Bad call: wrong argument shape, index out of range, negative degree.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input data that does not describe a valid object (zero line, duplicate line).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition of an operation does not hold for this input
// (pencil where an essential arrangement is required, unstable bundle for a
// jump-line query, non-factoring Poincare polynomial).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold for every input failed. Signals a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lineconf
