#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clifex {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is outside the supported domain (semisimple signature, dimension
// mismatch, mixed scalar kinds, ...). CLI maps these to exit code 1.
struct DomainError : Error {
  using Error::Error;
};

// Malformed textual input. `position` is a 0-based byte offset into the
// offending string. CLI maps these to exit code 2.
struct ParseError : Error {
  std::size_t position;
  ParseError(std::string message, std::size_t pos)
      : Error(std::move(message)), position(pos) {}
};

// A broken internal invariant; must not occur for valid inputs.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace clifex
