#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace v2v {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical or model domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine (quadrature, series, root finding) failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace v2v
