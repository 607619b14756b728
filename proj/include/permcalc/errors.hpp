#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permcalc {

/// Base class of every error this library throws deliberately.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; `position` is the 1-based character offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Arguments outside the documented range of an operation (usage error).
class UsageError : public Error {
public:
  using Error::Error;
};

class LengthOutOfRange : public UsageError {
public:
  using UsageError::UsageError;
};

/// Inputs violate a mathematical precondition of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public DomainError {
public:
  using DomainError::DomainError;
};

class CycleTypeMismatch : public DomainError {
public:
  using DomainError::DomainError;
};

class RangeError : public DomainError {
public:
  using DomainError::DomainError;
};

class BadIndex : public DomainError {
public:
  using DomainError::DomainError;
};

class MissingDivisor : public DomainError {
public:
  using DomainError::DomainError;
};

class BudgetExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

class Overflow : public DomainError {
public:
  using DomainError::DomainError;
};

/// The requested object exists for no input (a decidable no-instance).
class InfeasibleError : public Error {
public:
  using Error::Error;
};

class InfeasibleTarget : public InfeasibleError {
public:
  using InfeasibleError::InfeasibleError;
};

class SlackTooSmall : public InfeasibleError {
public:
  using InfeasibleError::InfeasibleError;
};

}  // namespace permcalc
