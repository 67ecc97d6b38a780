#include "leibniz/error.hpp"

namespace leibniz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotLeibniz: return "NotLeibniz";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::PreconditionUnverified: return "PreconditionUnverified";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::SquareLambda: return "SquareLambda";
    case ErrorCode::IsotropicForm: return "IsotropicForm";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace leibniz
