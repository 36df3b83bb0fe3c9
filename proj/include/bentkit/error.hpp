#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bentkit {

enum class Errc {
  DimensionOutOfRange,
  NonPrimitivePolynomial,
  DimensionMismatch,
  OddDimension,
  NotBent,
  NotNearBent,
  DerivativeNotConstant,
  ConditionTNotMet,
  ConditionViolation,
  BentVerificationFailed,
  InvalidExponentSet,
  ParseError,
  ExponentOutOfRange,
  NotBooleanConsistent,
  FormatError,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
    case Errc::NonPrimitivePolynomial: return "NonPrimitivePolynomial";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NotBent: return "NotBent";
    case Errc::NotNearBent: return "NotNearBent";
    case Errc::DerivativeNotConstant: return "DerivativeNotConstant";
    case Errc::ConditionTNotMet: return "ConditionTNotMet";
    case Errc::ConditionViolation: return "ConditionViolation";
    case Errc::BentVerificationFailed: return "BentVerificationFailed";
    case Errc::InvalidExponentSet: return "InvalidExponentSet";
    case Errc::ParseError: return "ParseError";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::NotBooleanConsistent: return "NotBooleanConsistent";
    case Errc::FormatError: return "FormatError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bentkit
