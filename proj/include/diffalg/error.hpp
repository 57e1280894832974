#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diffalg {

enum class ErrorKind {
  invalid_path,
  invalid_name,
  unbound_metavariable,
  unbound_variable,
  syntax_error,
  unknown_rule,
  pattern_mismatch,
  result_mismatch,
  missing_binding,
  duplicate_name,
  not_proved,
  capacity_exceeded,
  unsatisfiable_relation,
  precondition,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure. `line` and `column` are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : Error(ErrorKind::syntax_error,
              std::to_string(line) + ":" + std::to_string(column) + ": " +
                  message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace diffalg
