#include "imbalance/transforms.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "detail.hpp"

namespace imbalance {

PathLengthSequence expansion_at(const PathLengthSequence& l, std::size_t position) {
  const Depth split = l.at(position);
  std::vector<Depth> depths(l.components().begin(), l.components().end());
  depths.erase(depths.begin() + static_cast<std::ptrdiff_t>(position - 1));
  depths.push_back(split + 1);
  depths.push_back(split + 1);
  return detail::canonical(std::move(depths));
}

PathLengthSequence upper_expansion(const PathLengthSequence& l) {
  return expansion_at(l, l.size());
}

PathLengthSequence lower_expansion(const PathLengthSequence& l) {
  const std::size_t n = l.size();
  const std::size_t suf = l.suffix_length();
  return expansion_at(l, n > suf ? n - suf : 1);
}

std::size_t contraction_position(const PathLengthSequence& l) {
  if (l.size() < 2) {
    throw Error(ErrorCode::SingletonSequence, "contraction needs at least two components");
  }
  return l.size() - l.suffix_length() + 1;
}

PathLengthSequence contraction(const PathLengthSequence& l) {
  const std::size_t merged = contraction_position(l);
  std::vector<Depth> depths(l.components().begin(), l.components().end());
  // Positions merged and merged+1 hold the first two leaves of the deepest run.
  depths[merged - 1] -= 1;
  depths.erase(depths.begin() + static_cast<std::ptrdiff_t>(merged));
  return detail::canonical(std::move(depths));
}

}  // namespace imbalance
