#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "imbalance/error.hpp"

namespace imbalance {

using Depth = std::uint32_t;

/// Leaf depths of a full binary tree read left to right: nondecreasing,
/// nonnegative, with sum 2^-l_i equal to one exactly. Instances only come
/// out of validate()/parse(), so every value in circulation is valid.
///
/// Ordering operators are lexicographic on the components; they are used for
/// deterministic containers only and have nothing to do with the imbalance
/// order, which is compare().
class PathLengthSequence {
 public:
  /// Checks, in order: nonempty, no negative depth, nondecreasing, every
  /// depth at most n-1, Kraft equality. Throws Error / KraftSumError.
  static PathLengthSequence validate(std::span<const std::int64_t> components);
  static PathLengthSequence validate(std::initializer_list<std::int64_t> components);

  /// Parses the comma syntax `1,2,3,4,4` (no spaces) and validates.
  /// Malformed text raises ErrorCode::ParseError.
  static PathLengthSequence parse(std::string_view text);

  std::span<const Depth> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

  /// 1-based access, matching positions elsewhere in the API.
  Depth at(std::size_t position) const;

  Depth first() const noexcept { return components_.front(); }
  Depth last() const noexcept { return components_.back(); }

  /// Largest k such that the last k components are equal.
  std::size_t suffix_length() const noexcept;

  /// Sum of the components (external path length of the tree).
  std::uint64_t sum() const noexcept;

  bool is_constant() const noexcept { return first() == last(); }

  std::string to_string() const;

  friend bool operator==(const PathLengthSequence&, const PathLengthSequence&) = default;
  friend auto operator<=>(const PathLengthSequence&, const PathLengthSequence&) = default;

 private:
  explicit PathLengthSequence(std::vector<Depth> components)
      : components_(std::move(components)) {}

  std::vector<Depth> components_;
};

/// Parses comma-separated decimal integers without validating them as a
/// path-length sequence.
std::vector<std::int64_t> parse_integers(std::string_view text);

/// Exact S exp l at scale 2^L: sums[i] = sum_{j<=i} 2^(L - l_j).
struct ScaledPartialSums {
  unsigned scale_exponent = 0;
  std::vector<BigInt> sums;
};

ScaledPartialSums scaled_partial_sums(const PathLengthSequence& l, unsigned scale_exponent);

enum class OrderVerdict { Equal, MoreBalanced, LessBalanced, Incomparable };

std::string_view to_string(OrderVerdict verdict) noexcept;

/// Imbalance order. MoreBalanced means l ⊴ h with l != h: every partial sum
/// of l's dyadic weights is at most the corresponding one of h.
OrderVerdict compare(const PathLengthSequence& l, const PathLengthSequence& h);

/// compare() evaluated at an explicit common scale L >= max(last l, last h).
/// Always uses arbitrary-precision sums.
OrderVerdict compare_at_scale(const PathLengthSequence& l, const PathLengthSequence& h,
                              unsigned scale_exponent);

/// l ⊴ h (Equal or MoreBalanced).
bool more_balanced_or_equal(const PathLengthSequence& l, const PathLengthSequence& h);

/// l ⊲ h (MoreBalanced).
bool strictly_more_balanced(const PathLengthSequence& l, const PathLengthSequence& h);

/// Largest scale for which compare() uses 64-bit partial sums. Beyond it the
/// comparison falls back to BigInt.
inline constexpr unsigned kFixedWidthScaleLimit = 63;

}  // namespace imbalance
