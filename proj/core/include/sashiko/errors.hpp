#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sashiko {

// Base class for every error raised by the library. Violations that are
// data (kogin validation) are returned as values, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A grid or word is too small for the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured safety cap.
class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t requested_bits, std::size_t cap_bits);

  std::size_t requested_bits() const noexcept { return requested_bits_; }
  std::size_t cap_bits() const noexcept { return cap_bits_; }

 private:
  std::size_t requested_bits_;
  std::size_t cap_bits_;
};

// Malformed text input. Line and column are 1-based; column 0 means the
// whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class WidthMismatchError : public ParseError {
 public:
  WidthMismatchError(std::size_t line, std::size_t expected, std::size_t actual);
};

// A constructed object failed its own validation gate.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class UnknownMotifError : public Error {
 public:
  using Error::Error;
};

// An invariant that the library itself guarantees was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sashiko
