#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorKind {
  NotPrime,
  DegreeTooLarge,
  DivisionByZero,
  NotCompatible,
  ZeroPolynomial,
  UnitPolynomial,
  ContextMismatch,
  OrderSearchTooLarge,
  CharacteristicDividesN,
  NotCoprime,
  NotADivisor,
  NotMonic,
  PrimeLength,
  LengthMismatch,
  FieldMismatch,
  BudgetExceeded,
  DimensionMismatch,
  RankDeficient,
  ZeroCode,
  ConfigInvalid,
  ParseError,
  IoError,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so
/// batch drivers can classify rows (e.g. budget skips vs. genuine failures).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an exhaustive enumeration would visit more codewords than the
/// caller allowed. `required()` is the count that would have been needed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace cyclo
