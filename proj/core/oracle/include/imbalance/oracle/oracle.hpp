#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "imbalance/sequence.hpp"

// Brute-force reference implementations for cross-checking the library.
// Nothing here reuses the library's comparison, expansion or enumeration
// code; only PathLengthSequence is shared.
namespace imbalance::oracle {

/// l ⊴ h straight from the definition, with partial sums of 2^-l_i held as
/// exact rationals.
bool leq(const PathLengthSequence& l, const PathLengthSequence& h);

/// Depth-first search over nondecreasing depth assignments spending an exact
/// dyadic budget of 1, pruned when the remaining leaves cannot use up the
/// remaining budget. Sorted lexicographically. Throws ResourceLimit when
/// n > max_n.
std::vector<PathLengthSequence> enumerate_by_partition(std::size_t n, std::size_t max_n);

/// Raised when a pair has no unique greatest lower / least upper bound.
class NotALattice : public std::runtime_error {
 public:
  NotALattice(PathLengthSequence s, PathLengthSequence t, std::vector<PathLengthSequence> bounds,
              bool lower);

  const PathLengthSequence& first() const noexcept { return s_; }
  const PathLengthSequence& second() const noexcept { return t_; }
  /// The full lower (or upper) bound set of the pair.
  const std::vector<PathLengthSequence>& bounds() const noexcept { return bounds_; }

 private:
  PathLengthSequence s_;
  PathLengthSequence t_;
  std::vector<PathLengthSequence> bounds_;
};

/// Unique maximum of the common lower bounds within `universe`.
PathLengthSequence meet_bruteforce(const PathLengthSequence& s, const PathLengthSequence& t,
                                   std::span<const PathLengthSequence> universe);

/// Unique minimum of the common upper bounds within `universe`.
PathLengthSequence join_bruteforce(const PathLengthSequence& s, const PathLengthSequence& t,
                                   std::span<const PathLengthSequence> universe);

struct ClosureDiscrepancy {
  PathLengthSequence lower;
  PathLengthSequence upper;
  bool in_closure = false;
  bool in_order = false;
};

struct ClosureReport {
  std::size_t n = 0;
  std::size_t universe_size = 0;
  std::size_t relation_size = 0;
  std::vector<ClosureDiscrepancy> discrepancies;

  bool equal() const noexcept { return discrepancies.empty(); }
};

/// Reflexive-transitive closure of the minimal balancing relation, by
/// repeated relational squaring, compared pairwise against leq().
ClosureReport closure_equals_order(std::size_t n, std::size_t max_n);

}  // namespace imbalance::oracle
