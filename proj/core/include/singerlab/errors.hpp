#pragma once

#include <stdexcept>
#include <string>

namespace singerlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (non-prime p, singular
/// matrix where an invertible one is required, mismatched dimensions, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Division by zero in a field or polynomial ring.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure exceeded its work budget. Kept distinct so the
/// CLI can map it to the usage/budget exit code.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace singerlab
