#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or fields).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured computation budget (S-pair count, degree cap, size
/// threshold) was exhausted. Never a statement about the mathematics.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A theorem-backed postcondition failed at runtime (strict mode).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace conelab
