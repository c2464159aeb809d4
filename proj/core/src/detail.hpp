#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "imbalance/sequence.hpp"

namespace imbalance::detail {

// Sorts and validates a depth multiset produced by a library transform.
inline PathLengthSequence canonical(std::vector<Depth> depths) {
  std::sort(depths.begin(), depths.end());
  const std::vector<std::int64_t> wide(depths.begin(), depths.end());
  return PathLengthSequence::validate(wide);
}

}  // namespace imbalance::detail
