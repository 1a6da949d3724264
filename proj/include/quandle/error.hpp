#ifndef QUANDLE_ERROR_HPP
#define QUANDLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quandle {

// Base class for every domain error raised by the library. The CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Bad arguments to an otherwise well-formed call (degree mismatch, index out of
// range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A Cayley table, map or involution failed one of the defining laws. The
// message carries the witness.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

// An enumeration or matrix size bound was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace quandle

#endif  // QUANDLE_ERROR_HPP
