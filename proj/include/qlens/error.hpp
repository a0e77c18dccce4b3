#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlens {

enum class Errc {
  NonUnit,
  BadModulus,
  NotPrime,
  InvalidParams,
  InvalidMatrix,
  TooLarge,
  NonIntegerResult,
  DimensionMismatch,
  IndexOutOfRange,
  HypothesisUnmet,
  BudgetExceeded,
  ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonUnit: return "NonUnit";
    case Errc::BadModulus: return "BadModulus";
    case Errc::NotPrime: return "NotPrime";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InvalidMatrix: return "InvalidMatrix";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qlens
