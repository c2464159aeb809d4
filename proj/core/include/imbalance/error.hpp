#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace imbalance {

using BigInt = boost::multiprecision::cpp_int;

enum class ErrorCode {
  EmptySequence,
  NotSorted,
  NegativeDepth,
  DepthExceedsBound,
  KraftSumNotOne,
  ScaleTooSmall,
  LengthMismatch,
  PositionOutOfRange,
  SingletonSequence,
  NotAnExcessIndex,
  ResourceLimit,
  ElementNotInUniverse,
  MalformedTree,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// A dyadic rational numerator / 2^exponent kept in lowest terms
/// (numerator odd, or exponent zero).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, unsigned exponent);

  const BigInt& numerator() const noexcept { return numerator_; }
  unsigned exponent() const noexcept { return exponent_; }
  BigInt denominator() const;

  /// "9/8", "-1/4", "0", "3".
  std::string to_string() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;

 private:
  BigInt numerator_ = 0;
  unsigned exponent_ = 0;
};

/// Base of every error raised by the library. The position, when present,
/// is 1-based like every other position on the public surface.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

/// Raised by validation when the dyadic weights do not sum to one.
class KraftSumError : public Error {
 public:
  explicit KraftSumError(DyadicRational kraft_sum);

  /// The exact value of sum 2^-l_i.
  const DyadicRational& kraft_sum() const noexcept { return kraft_sum_; }
  /// kraft_sum - 1: positive for an excess, negative for a deficit.
  DyadicRational excess() const;

 private:
  DyadicRational kraft_sum_;
};

}  // namespace imbalance
