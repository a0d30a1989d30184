#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or complex shapes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Two objects built over different primes met in one computation.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded. Never silently truncated.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated (invalid object, index out of range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace smc
