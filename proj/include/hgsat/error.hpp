#pragma once

#include <stdexcept>
#include <string>

namespace hgsat {

enum class ErrorKind {
  NotPrime,
  PrimeTooSmall,
  BadPrecision,
  PrecisionOverflow,
  PrecisionMismatch,
  PrecisionExhausted,
  SingularLambda,
  NoOrderFourCharacter,
  ArgumentNotRepresentable,
  ParameterNotPadic,
  WrongResidueClass,
  NoRepresentative,
  BadWeight,
  NonIntegralLeadingPower,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hgsat
