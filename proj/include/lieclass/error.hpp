#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieclass {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix/form sizes that do not match the owning algebra or chart.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A degree, index or parameter outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A chart point too close to the boundary for the finite-difference stencil.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// Two jet sections or forms living on different charts.
class ChartMismatch : public Error {
 public:
  using Error::Error;
};

/// Exactness was asked of a cochain that is not closed.
class NotClosed : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible is (numerically) singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The structure functions of a frame are not constant, or round to a non-Lie bracket.
class LocalAlgebraError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog identifier.
class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Positional parse failure in an algebra file (1-based line and column).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lieclass
