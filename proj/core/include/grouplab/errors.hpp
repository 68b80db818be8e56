#pragma once

#include <stdexcept>
#include <string>

namespace grouplab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input: bad generators, non-normal subgroup
/// arguments, unparsable group specs, schema violations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (order cap, normal-subgroup cap, prime search
/// cap) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A postcondition that should be impossible failed. Raised by the
/// verification traps inside the character-table pipeline.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace grouplab
