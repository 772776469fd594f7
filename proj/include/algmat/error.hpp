#ifndef ALGMAT_ERROR_HPP
#define ALGMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algmat {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  CharZeroField,
  DegreeTooLarge,
  ModulusTooLarge,
  InvalidField,
  UnknownField,
  SyntaxError,
  UnknownVariable,
  DuplicateVariable,
  RingMismatch,
  NameCollision,
  ExponentOverflow,
  ResourceLimitExceeded,
  ContextMismatch,
  IndexOutOfRange,
  DenominatorVanishes,
  NotOnVariety,
  NoValidPoint,
  GroundSetTooLarge,
  GroundSetMismatch,
  ShiftPairNonzero,
  PrimalityNotAsserted,
  NotAMatroid,
  InvalidArgument,
  Internal,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry a 1-based line and column when known (0 otherwise).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::SyntaxError, format(what, line, column)), message_(what), line_(line), column_(column) {}
  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace algmat

#endif
