#pragma once

#include <stdexcept>
#include <string>

namespace starcheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characteristic 2, composite modulus, or otherwise unusable field.
class InvalidField : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("scalars belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Incompatible algebra kind/involution/size, or elements from different algebras.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this algebra (e.g. trace on quaternions).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An element was required to be symmetric (or skew) and is not.
class WrongSymmetryType : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A constructive step needed a membership that does not hold.
class DecompositionObstructed : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based column (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(column == 0 ? message : message + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace starcheck
