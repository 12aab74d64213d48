#pragma once

#include <stdexcept>
#include <string>

namespace rootlat {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller passed operands whose shapes or basis tags do not fit together.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Inversion of a singular matrix was requested.
struct SingularMatrix : Error {
  using Error::Error;
};

// A type label is unparseable or its rank is inadmissible.
struct InvalidLabel : Error {
  using Error::Error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace rootlat
