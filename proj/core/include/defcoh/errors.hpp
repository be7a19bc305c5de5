#pragma once

#include <stdexcept>
#include <string>

namespace defcoh {

/// Base class for all defcoh error conditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};
struct DegreeOutOfRange : Error {
  using Error::Error;
};
struct ArityOutOfRange : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct Singular : Error {
  using Error::Error;
};
struct NonChainMap : Error {
  using Error::Error;
};
struct NotSkew : Error {
  using Error::Error;
};
struct NotFlat : Error {
  using Error::Error;
};
struct NotCocycle : Error {
  using Error::Error;
};
struct NotLinear : Error {
  using Error::Error;
};

/// Raised when an instance file cannot be read as structured text.
struct ParseError : Error {
  using Error::Error;
};
/// Raised when a parsed instance violates a structural invariant
/// (skewness, Jacobi, flatness, dimension caps).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace defcoh
