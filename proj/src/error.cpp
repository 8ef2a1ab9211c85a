#include "spinkirby/error.hpp"

namespace spinkirby {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingCharacteristicVector: return "MissingCharacteristicVector";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::InvalidSeifertMatrix: return "InvalidSeifertMatrix";
    case ErrorCode::UnknownKnot: return "UnknownKnot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::NotUnitFramed: return "NotUnitFramed";
    case ErrorCode::SameIndex: return "SameIndex";
    case ErrorCode::DegeneratePresentation: return "DegeneratePresentation";
    case ErrorCode::AmbiguousExtension: return "AmbiguousExtension";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OddSecondDerivative: return "OddSecondDerivative";
    case ErrorCode::TooManySolutions: return "TooManySolutions";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NotSymmetric:
    case ErrorCode::NotCharacteristic:
    case ErrorCode::MissingCharacteristicVector:
    case ErrorCode::InvalidScheme:
    case ErrorCode::InvalidSeifertMatrix:
    case ErrorCode::UnknownKnot:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace spinkirby
