#pragma once

#include <stdexcept>
#include <string>

namespace tlcb {

/// Input violates an operation's precondition (bad index, malformed text, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable cap (class size, stratum size, closure size) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Diagram reduction scalars could not be determined uniquely.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tlcb
