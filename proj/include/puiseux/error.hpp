#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace puiseux {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid mathematical input: zero polynomials, reducible inputs, short series.
struct MathError : Error {
  using Error::Error;
};

// A broken internal invariant. Reaching one of these is a bug.
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace puiseux
