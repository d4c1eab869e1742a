#pragma once

#include <stdexcept>
#include <string>

namespace clusterlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, or an undefined quantity such as the degree of 0.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An id (vertex, face, marked point) is not known.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A birational map was evaluated where it is not regular.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// A configuration fails the genericity a map needs.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Strand tracing or face tracing hit an inconsistent rotation system.
class TraceError : public Error {
 public:
  using Error::Error;
};

/// The local pattern required by a 2-2 move is not present.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant failed during construction (usually a non-minimal input).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterlab
