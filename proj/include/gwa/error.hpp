#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwa {

enum class ErrorKind {
  FieldMismatch,
  DivisionByZero,
  ZeroPolynomial,
  ConstantInput,
  InvalidField,
  InvalidSpec,
  NotIrreducible,
  DegreeMismatch,
  FactorOutsideOrbit,
  NotComparable,
  NotADivisor,
  InfiniteLength,
  SpecMismatch,
  ZeroUnit,
  NoMaximalSubmodule,
  NotMaximal,
  ReducibleIdeal,
  SingularP,
  NotCompatible,
  DimensionMismatch,
  NotInvertible,
  NotMinimal,
  FiniteOrbit,
  ParseError,
  LimitExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the batch runner in particular) can report it by name.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gwa
