#pragma once

#include <stdexcept>
#include <string>

namespace spinlab {

/// Operand has a dimension the operation does not support.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Density matrix or Bloch vector that is not a physical qubit state.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Conditional expectation requested on a zero-probability event.
class UndefinedConditionalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace spinlab
