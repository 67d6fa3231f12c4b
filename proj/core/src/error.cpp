#include "cyclo/error.hpp"

namespace cyclo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::UnitPolynomial: return "UnitPolynomial";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::OrderSearchTooLarge: return "OrderSearchTooLarge";
    case ErrorKind::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::PrimeLength: return "PrimeLength";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error(ErrorKind::BudgetExceeded,
            "enumeration needs " + std::to_string(required) + " codewords, budget is " +
                std::to_string(budget)),
      required_(required),
      budget_(budget) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cyclo
