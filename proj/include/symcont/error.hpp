#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcont {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid function evaluation: division by zero, 1/x at 0.
class EvaluationError : public Error {
public:
  using Error::Error;
};

/// A point is not governed by any piece of a piecewise function.
class DomainError : public Error {
public:
  using Error::Error;
};

class NotEnumerableError : public Error {
public:
  using Error::Error;
};

/// Malformed domain, function, or configuration value.
class SpecError : public Error {
public:
  using Error::Error;
};

class ParseError : public SpecError {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : SpecError(message), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class OverlapError : public Error {
public:
  OverlapError(const std::string& message, std::size_t first, std::size_t second)
      : Error(message), first_(first), second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Function pieces do not cover the analysed domain exactly once.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

}  // namespace symcont
