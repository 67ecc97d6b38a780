#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class ErrorCode {
  MixedFields,
  DivisionByZero,
  DimensionMismatch,
  BudgetExceeded,
  UnsupportedField,
  NotLeibniz,
  NotASubalgebra,
  NotAnIdeal,
  PreconditionUnverified,
  BadCharacteristic,
  SquareLambda,
  IsotropicForm,
  BadDimension,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; `code()` lets
/// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leibniz
