#pragma once

#include <stdexcept>
#include <string>

namespace elg {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad JSON, dimension mismatch, out-of-range parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold (e.g. a vector that is not null).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace elg
