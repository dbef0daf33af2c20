#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An interval component violates 0 <= lo <= hi <= 1, or a dyadic lies
/// outside [0,1].
struct MalformedComponent : Error {
  using Error::Error;
};

/// A membership query point lies outside [0,1).
struct PointOutOfRange : Error {
  using Error::Error;
};

/// A value exceeded the component-count or bit-height budget.
struct ResourceLimit : Error {
  using Error::Error;
};

/// Program text could not be parsed. Carries the 1-based source line.
struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// A computation sequence failed structural validation.
struct ValidationError : Error {
  using Error::Error;
};

/// Circuit operands have incompatible widths.
struct WidthMismatch : Error {
  using Error::Error;
};

/// Modulus below 2.
struct DegenerateModulus : Error {
  using Error::Error;
};

/// Bitset operands have incompatible resolutions.
struct ResolutionMismatch : Error {
  using Error::Error;
};

/// A slice or instruction index is out of range.
struct IndexOutOfRange : Error {
  using Error::Error;
};

}  // namespace ivc
