#include "hgsat/error.hpp"

namespace hgsat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorKind::BadPrecision: return "BadPrecision";
    case ErrorKind::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::SingularLambda: return "SingularLambda";
    case ErrorKind::NoOrderFourCharacter: return "NoOrderFourCharacter";
    case ErrorKind::ArgumentNotRepresentable: return "ArgumentNotRepresentable";
    case ErrorKind::ParameterNotPadic: return "ParameterNotPadic";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::NoRepresentative: return "NoRepresentative";
    case ErrorKind::BadWeight: return "BadWeight";
    case ErrorKind::NonIntegralLeadingPower: return "NonIntegralLeadingPower";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace hgsat
