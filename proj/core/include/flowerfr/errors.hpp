#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowerfr {

// Root of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed sequence notation. `position` is the 0-based byte offset into the
// input where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Index or parameter outside its documented domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Inconsistent or unsupported arguments (hypotheses not met, i == p, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A configured size ceiling (sequence length, subset count) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace flowerfr
