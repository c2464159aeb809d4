#include "imbalance/error.hpp"

#include <utility>

namespace imbalance {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::NegativeDepth: return "NegativeDepth";
    case ErrorCode::DepthExceedsBound: return "DepthExceedsBound";
    case ErrorCode::KraftSumNotOne: return "KraftSumNotOne";
    case ErrorCode::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::SingletonSequence: return "SingletonSequence";
    case ErrorCode::NotAnExcessIndex: return "NotAnExcessIndex";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::ElementNotInUniverse: return "ElementNotInUniverse";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

DyadicRational::DyadicRational(BigInt numerator, unsigned exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && (numerator_ & 1) == 0) {
    numerator_ >>= 1;
    --exponent_;
  }
}

BigInt DyadicRational::denominator() const { return BigInt(1) << exponent_; }

std::string DyadicRational::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/" + denominator().str();
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> position)
    : std::runtime_error(std::string(imbalance::to_string(code)) + ": " + what),
      code_(code),
      position_(position) {}

KraftSumError::KraftSumError(DyadicRational kraft_sum)
    : Error(ErrorCode::KraftSumNotOne,
            "sum of 2^-l_i is " + kraft_sum.to_string() + ", expected 1"),
      kraft_sum_(std::move(kraft_sum)) {}

DyadicRational KraftSumError::excess() const {
  const unsigned e = kraft_sum_.exponent();
  return DyadicRational(kraft_sum_.numerator() - (BigInt(1) << e), e);
}

}  // namespace imbalance
