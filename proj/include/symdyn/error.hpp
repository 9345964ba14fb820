#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

// Base of every engine error; the C API maps the subclasses onto status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stated precondition or hypothesis does not hold for the given input.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration cap, automaton size cap or arithmetic budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Query outside the validity range of a configuration.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Carries the source name and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }

 private:
  std::string source_;
  int line_;
};

}  // namespace symdyn
