#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qff {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  ZeroArgument,
  FieldTooLarge,
  ZeroPolynomial,
  BothZero,
  DegreeTooSmall,
  NotIrreducible,
  ZeroDenominator,
  ZeroElement,
  DegenerateForm,
  BudgetExceeded,
  ParseError,
  EvenCharacteristic,
  ReducibleModulus,
  NotPrime,
  InvariantViolation,
  InvalidArgument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qff
