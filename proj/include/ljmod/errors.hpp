#pragma once

#include <stdexcept>
#include <string>

namespace ljmod {

// Base of every error the library throws. The CLI maps the subclasses
// onto exit codes (domain-like errors -> 2, resource caps -> 3,
// invariant violations -> 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IdentificationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CapabilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConsistencyError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ljmod
