#pragma once

#include <stdexcept>
#include <string>

namespace jacquat {

/// Division by zero, inverse of zero, recurrence at a negative index, and the like.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cyclotomic value was expected to be rational but has a nonzero omega part.
/// Carries the offending value rendered as text.
class NonRealCyclotomicError : public DomainError {
 public:
  explicit NonRealCyclotomicError(std::string value)
      : DomainError("non-real cyclotomic value: " + value), value_(std::move(value)) {}
  const std::string& value() const noexcept { return value_; }

 private:
  std::string value_;
};

/// Binary quaternion operation over two different algebras H(alpha,beta).
class AlgebraMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inverse of a quaternion whose norm form vanishes (zero divisors included).
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Absolute norm requested for a coefficient kind without an absolute value.
class UnsupportedModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Identity id not present in the catalog.
class UnknownIdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside an identity's declared scope.
class ParamsOutOfScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid verification configuration (empty ranges and the like).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jacquat
