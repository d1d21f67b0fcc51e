#ifndef CSPOLY_ERRORS_HPP
#define CSPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cspoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain caller input (length mismatch, negative part
/// where a partition is required, unparsable rational, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: nonzero remainder in an exact
/// division, a non-symmetric intermediate, a broken triangular structure.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Raised by the rational layer on any attempt to divide by zero.
class DivisionByZero : public InvariantViolation {
 public:
  DivisionByZero() : InvariantViolation("division by zero") {}
};

}  // namespace cspoly

#endif
