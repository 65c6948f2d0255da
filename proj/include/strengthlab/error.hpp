#pragma once

#include <stdexcept>
#include <string>

namespace strengthlab {

/// Malformed input or a violated precondition on caller-supplied arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well formed but exceeds what the exact methods can finish.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strength is undefined for graphs without edges.
class EmptyGraphError : public std::domain_error {
 public:
  EmptyGraphError() : std::domain_error("graph has no edges; strength is undefined") {}
  using std::domain_error::domain_error;
};

/// A resume cursor that does not describe a reachable enumeration state.
class CursorError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace strengthlab
