#pragma once

#include <stdexcept>
#include <string>

namespace zeta3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex, presentation or cover could not be built from the given input.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A complex failed validation where a valid one was required.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed complex file or other textual input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Polynomial division that was required to be exact left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// The numerical root finder failed to converge.
class RootFindingError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zeta3
