#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnorkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects built over different variable contexts were combined.
class ContextError : public Error {
 public:
  using Error::Error;
};

// Bad user input: unreadable files, schema violations, dangling names.
class InputError : public Error {
 public:
  using Error::Error;
};

// Expression syntax error with a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A mathematical operation was asked for outside its domain
// (e.g. a quotient algebra of a positive-dimensional ideal).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace milnorkit
