#pragma once

#include <stdexcept>
#include <string>

namespace groversim {

// Bad argument: index out of range, invalid gate, malformed input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A state that violates an operation's precondition (e.g. non-unit norm).
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit cap or enumeration guard exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace groversim
