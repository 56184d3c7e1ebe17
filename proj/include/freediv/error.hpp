#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freediv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingMismatch : Error {
  RingMismatch() : Error("operands live in different rings") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by the zero polynomial") {}
};

struct InvalidArgument : Error {
  using Error::Error;
};

// Column is 1-based and points at the offending character.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t col)
      : Error(what + " at column " + std::to_string(col)), column(col) {}
  std::size_t column;
};

// Raised by the Groebner machinery when a configured cap is exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};

}  // namespace freediv
