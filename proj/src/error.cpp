#include "psl2ogs/error.hpp"

namespace psl2ogs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidA: return "InvalidA";
    case ErrorCode::InvalidB: return "InvalidB";
    case ErrorCode::NotOddCharacteristic: return "NotOddCharacteristic";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::NoValidA: return "NoValidA";
    case ErrorCode::DetNotOne: return "DetNotOne";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedQ: return "UnsupportedQ";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace psl2ogs
