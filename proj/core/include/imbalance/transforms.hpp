#pragma once

#include <cstddef>

#include "imbalance/sequence.hpp"

namespace imbalance {

/// Splits the leaf at 1-based `position` into two leaves one level deeper.
/// The result is returned in canonical (sorted) order, so expanding a
/// non-final leaf of a run may move the new pair past its equals.
PathLengthSequence expansion_at(const PathLengthSequence& l, std::size_t position);

/// l⁺: expansion at position n.
PathLengthSequence upper_expansion(const PathLengthSequence& l);

/// l₊: expansion at position max(1, n - suf l). Coincides with l⁺ exactly
/// when l is constant.
PathLengthSequence lower_expansion(const PathLengthSequence& l);

/// The (n-1)-component sequence obtained by merging the first two leaves of
/// the deepest run: (l_1..l_{n-k}, l_{n-k+1} - 1, l_n x (k-2)) with k = suf l.
/// Throws SingletonSequence for n = 1.
PathLengthSequence contraction(const PathLengthSequence& l);

/// Position at which contraction(l) must be re-expanded to give back l.
std::size_t contraction_position(const PathLengthSequence& l);

}  // namespace imbalance
