#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psl2ogs {

enum class ErrorCode {
  NotPrime,
  NotPrimePower,
  TooLarge,
  FieldMismatch,
  DivisionByZero,
  OutOfRange,
  IndexOutOfRange,
  InvalidA,
  InvalidB,
  NotOddCharacteristic,
  EvenCharacteristic,
  NoValidA,
  DetNotOne,
  ParseError,
  UnsupportedQ,
  InternalInvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// CLI maps onto exit statuses; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace psl2ogs
