#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace golod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (index out of range, k < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A homogeneous input was required.
class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// The unit ideal was passed where a proper ideal is required.
class ImproperIdeal : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded one of its hard caps.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. Positions are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  /// Message without the position prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return what;
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace golod
