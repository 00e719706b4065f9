#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NotPrime,
  ZeroLambda,
  InfiniteField,
  NonSquare,
  DimensionMismatch,
  AmbientMismatch,
  AlgebraMismatch,
  NotLeibniz,
  NotSubalgebra,
  NotInvariant,
  NotEndomorphism,
  NotExtraspecial,
  BadGenerator,
  GuardExceeded,
  NotSubset,
  Degenerate,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace leibniz
