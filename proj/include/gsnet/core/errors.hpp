#pragma once

#include <stdexcept>
#include <string>

namespace gsnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (range, domain, arity).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search or representation cap (vertex count, orbit size, qubit count) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// No extraction plan reaches the requested resource.
class NoPlanError : public Error {
 public:
  using Error::Error;
};

/// Counts for a required measurement setting are missing or do not match the plan.
class MissingSettingError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsnet
