#include "imbalance/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace imbalance {

PathLengthSequence PathLengthSequence::validate(std::span<const std::int64_t> components) {
  if (components.empty()) {
    throw Error(ErrorCode::EmptySequence, "a path-length sequence needs at least one component");
  }
  const std::size_t n = components.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (components[i] < 0) {
      throw Error(ErrorCode::NegativeDepth,
                  "component " + std::to_string(i + 1) + " is " + std::to_string(components[i]),
                  i + 1);
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (components[i] < components[i - 1]) {
      throw Error(ErrorCode::NotSorted,
                  "component " + std::to_string(i + 1) + " (" + std::to_string(components[i]) +
                      ") is smaller than its predecessor (" + std::to_string(components[i - 1]) +
                      ")",
                  i + 1);
    }
  }
  // A full binary tree with n leaves has depth at most n-1. Checking this
  // first also keeps the exact Kraft sum below n bits.
  const auto bound = static_cast<std::int64_t>(n - 1);
  if (components.back() > bound) {
    throw Error(ErrorCode::DepthExceedsBound,
                "component " + std::to_string(n) + " is " + std::to_string(components.back()) +
                    ", deeper than n-1 = " + std::to_string(bound),
                n);
  }

  const auto scale = static_cast<unsigned>(components.back());
  BigInt total = 0;
  for (const std::int64_t depth : components) {
    total += BigInt(1) << (scale - static_cast<unsigned>(depth));
  }
  if (total != (BigInt(1) << scale)) {
    throw KraftSumError(DyadicRational(total, scale));
  }

  std::vector<Depth> depths(components.begin(), components.end());
  return PathLengthSequence(std::move(depths));
}

PathLengthSequence PathLengthSequence::validate(std::initializer_list<std::int64_t> components) {
  return validate(std::span<const std::int64_t>(components.begin(), components.size()));
}

PathLengthSequence PathLengthSequence::parse(std::string_view text) {
  const std::vector<std::int64_t> values = parse_integers(text);
  return validate(values);
}

std::vector<std::int64_t> parse_integers(std::string_view text) {
  std::vector<std::int64_t> values;
  if (text.empty()) {
    throw Error(ErrorCode::ParseError, "empty sequence text");
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::ParseError,
                  "'" + std::string(token) + "' is not a decimal integer in '" + std::string(text) +
                      "'",
                  values.size() + 1);
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

Depth PathLengthSequence::at(std::size_t position) const {
  if (position < 1 || position > components_.size()) {
    throw Error(ErrorCode::PositionOutOfRange,
                "position " + std::to_string(position) + " not in 1.." +
                    std::to_string(components_.size()),
                position);
  }
  return components_[position - 1];
}

std::size_t PathLengthSequence::suffix_length() const noexcept {
  const auto tail = std::find_if(components_.rbegin(), components_.rend(),
                                 [last = last()](Depth d) { return d != last; });
  return static_cast<std::size_t>(tail - components_.rbegin());
}

std::uint64_t PathLengthSequence::sum() const noexcept {
  return std::accumulate(components_.begin(), components_.end(), std::uint64_t{0});
}

std::string PathLengthSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(components_[i]);
  }
  return out;
}

ScaledPartialSums scaled_partial_sums(const PathLengthSequence& l, unsigned scale_exponent) {
  if (scale_exponent < l.last()) {
    throw Error(ErrorCode::ScaleTooSmall, "scale 2^" + std::to_string(scale_exponent) +
                                              " is below the deepest leaf (" +
                                              std::to_string(l.last()) + ")");
  }
  ScaledPartialSums result;
  result.scale_exponent = scale_exponent;
  result.sums.reserve(l.size());
  BigInt running = 0;
  for (const Depth depth : l.components()) {
    running += BigInt(1) << (scale_exponent - depth);
    result.sums.push_back(running);
  }
  return result;
}

std::string_view to_string(OrderVerdict verdict) noexcept {
  switch (verdict) {
    case OrderVerdict::Equal: return "equal";
    case OrderVerdict::MoreBalanced: return "more-balanced";
    case OrderVerdict::LessBalanced: return "less-balanced";
    case OrderVerdict::Incomparable: return "incomparable";
  }
  return "unknown";
}

namespace {

void require_same_length(const PathLengthSequence& l, const PathLengthSequence& h) {
  if (l.size() != h.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(l.size()) + " components vs " +
                                               std::to_string(h.size()));
  }
}

OrderVerdict verdict_from(bool l_below, bool h_below) {
  if (l_below && h_below) return OrderVerdict::Equal;
  if (l_below) return OrderVerdict::MoreBalanced;
  if (h_below) return OrderVerdict::LessBalanced;
  return OrderVerdict::Incomparable;
}

// Partial sums at scale <= 63 never exceed 2^63.
OrderVerdict compare_fixed_width(const PathLengthSequence& l, const PathLengthSequence& h,
                                 unsigned scale) {
  bool l_below = true;
  bool h_below = true;
  std::uint64_t sum_l = 0;
  std::uint64_t sum_h = 0;
  const auto lc = l.components();
  const auto hc = h.components();
  for (std::size_t i = 0; i < lc.size(); ++i) {
    sum_l += std::uint64_t{1} << (scale - lc[i]);
    sum_h += std::uint64_t{1} << (scale - hc[i]);
    if (sum_l > sum_h) l_below = false;
    if (sum_h > sum_l) h_below = false;
    if (!l_below && !h_below) break;
  }
  return verdict_from(l_below, h_below);
}

}  // namespace

OrderVerdict compare_at_scale(const PathLengthSequence& l, const PathLengthSequence& h,
                              unsigned scale_exponent) {
  require_same_length(l, h);
  const ScaledPartialSums sl = scaled_partial_sums(l, scale_exponent);
  const ScaledPartialSums sh = scaled_partial_sums(h, scale_exponent);
  bool l_below = true;
  bool h_below = true;
  for (std::size_t i = 0; i < sl.sums.size(); ++i) {
    if (sl.sums[i] > sh.sums[i]) l_below = false;
    if (sh.sums[i] > sl.sums[i]) h_below = false;
  }
  return verdict_from(l_below, h_below);
}

OrderVerdict compare(const PathLengthSequence& l, const PathLengthSequence& h) {
  require_same_length(l, h);
  const unsigned scale = std::max(l.last(), h.last());
  if (scale <= kFixedWidthScaleLimit) return compare_fixed_width(l, h, scale);
  return compare_at_scale(l, h, scale);
}

bool more_balanced_or_equal(const PathLengthSequence& l, const PathLengthSequence& h) {
  const OrderVerdict v = compare(l, h);
  return v == OrderVerdict::Equal || v == OrderVerdict::MoreBalanced;
}

bool strictly_more_balanced(const PathLengthSequence& l, const PathLengthSequence& h) {
  return compare(l, h) == OrderVerdict::MoreBalanced;
}

}  // namespace imbalance
