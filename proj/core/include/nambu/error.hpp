#pragma once

#include <stdexcept>
#include <string>

namespace nambu {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different variable contexts.
class ContextMismatch : public Error {
public:
  using Error::Error;
};

/// A documented precondition does not hold (non-homogeneous input, bad index, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Bracket called with the wrong number of arguments.
class ArityMismatch : public DomainError {
public:
  using DomainError::DomainError;
};

/// A Groebner/saturation computation ran out of its step budget.
class BudgetExhausted : public Error {
public:
  using Error::Error;
};

} // namespace nambu
