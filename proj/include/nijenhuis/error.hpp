#pragma once

#include <stdexcept>
#include <string>

namespace nijenhuis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (vector length, matrix size, algebra dimension).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar text or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structure constants violating antisymmetry, Jacobi, or the field tag.
class InvalidAlgebraError : public Error {
 public:
  using Error::Error;
};

/// The spectrum of an operator is not usable (repeated, non-real, or outside the scalar field).
class SpectrumError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the values (not the shapes) of the arguments failed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a library defect.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace nijenhuis
