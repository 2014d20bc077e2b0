#pragma once

#include <stdexcept>
#include <string>

namespace advect {

/// Argument outside the mathematical domain of an operation (negative nu, bad theta).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed data: non-finite field entries, bad JSON, inconsistent sizes.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scheme string or family/integrator combination with no stencil construction.
class UnsupportedScheme : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure that could not deliver its postcondition.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace advect
