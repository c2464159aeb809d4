#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imbalance/sequence.hpp"

namespace imbalance {

/// Default ceiling on n for anything that enumerates a whole universe.
/// |universe(20)| = 16952; the count grows by roughly 1.8x per step.
inline constexpr std::size_t kDefaultMaxN = 20;

/// Index pair (lower, upper) into LatticeUniverse::elements().
using CoverEdge = std::pair<std::size_t, std::size_t>;

/// All path-length sequences with n components, in lexicographic order, and
/// optionally the covering relation of the imbalance order over them.
class LatticeUniverse {
 public:
  std::size_t n() const noexcept { return n_; }
  const std::vector<PathLengthSequence>& elements() const& noexcept { return elements_; }
  std::vector<PathLengthSequence> elements() && noexcept { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::size_t> index_of(const PathLengthSequence& l) const;
  bool contains(const PathLengthSequence& l) const { return index_of(l).has_value(); }

  bool has_covers() const noexcept { return has_covers_; }
  /// Transitive reduction of ⊴, sorted. Empty unless has_covers().
  const std::vector<CoverEdge>& cover_edges() const noexcept { return covers_; }

  /// Elements covered by element `index`, ascending. Requires has_covers().
  std::vector<std::size_t> lower_covers(std::size_t index) const;
  std::vector<std::size_t> upper_covers(std::size_t index) const;

  /// Returns a copy with cover_edges() filled in.
  LatticeUniverse with_covers() const;

 private:
  friend LatticeUniverse enumerate(std::size_t n, std::size_t max_n);

  LatticeUniverse(std::size_t n, std::vector<PathLengthSequence> elements)
      : n_(n), elements_(std::move(elements)) {}

  void require_covers() const;

  std::size_t n_ = 0;
  std::vector<PathLengthSequence> elements_;
  std::vector<CoverEdge> covers_;
  bool has_covers_ = false;
};

/// Every path-length sequence with n components, generated as the closure of
/// expansion_at over enumerate(n-1) starting from {(0)}.
/// Throws ResourceLimit when n > max_n and PositionOutOfRange when n == 0.
LatticeUniverse enumerate(std::size_t n, std::size_t max_n = kDefaultMaxN);

/// enumerate(n) with its cover edges.
LatticeUniverse hasse(std::size_t n, std::size_t max_n = kDefaultMaxN);

/// Covering pairs (lower, upper) of the imbalance order on n components.
std::vector<std::pair<PathLengthSequence, PathLengthSequence>> covering_pairs(
    std::size_t n, std::size_t max_n = kDefaultMaxN);

/// Greatest lower bound by recursion on contractions: with m the meet of the
/// contractions, the meet is m⁺ when m⁺ is below both arguments, else m₊.
PathLengthSequence meet(const PathLengthSequence& s, const PathLengthSequence& t);

/// Least upper bound: meet folded over the common upper bounds in `universe`.
PathLengthSequence join(const PathLengthSequence& s, const PathLengthSequence& t,
                        const LatticeUniverse& universe);
PathLengthSequence join(const PathLengthSequence& s, const PathLengthSequence& t,
                        std::size_t max_n = kDefaultMaxN);

/// Most balanced sequence of length n: the unique near-constant one.
PathLengthSequence bottom(std::size_t n);
/// Least balanced sequence of length n: (1, 2, ..., n-1, n-1), or (0).
PathLengthSequence top(std::size_t n);

/// 1-based positions j with 1 < j < n, l_{j-1} < l_j = l_{j+1}, and some
/// component at most l_j - 2.
std::vector<std::size_t> excess_indices(const PathLengthSequence& l);

/// Moves one leaf up from the first pair of the run starting at excess index
/// j and splits the last leaf of depth <= l_j - 2. Strictly more balanced
/// than l. Throws NotAnExcessIndex.
PathLengthSequence bal(const PathLengthSequence& l, std::size_t excess_index);

struct BalancingStep {
  PathLengthSequence source;
  std::size_t excess_index = 0;
  PathLengthSequence target;  // bal(source, excess_index)

  friend bool operator==(const BalancingStep&, const BalancingStep&) = default;
};

/// All (bal[l,j], l) over the universe of n, ordered by source then index.
std::vector<BalancingStep> minimal_balancing_relation(std::size_t n,
                                                      std::size_t max_n = kDefaultMaxN);
std::vector<BalancingStep> minimal_balancing_relation(const LatticeUniverse& universe);

/// `{"n": .., "nodes": [[..]..], "covers": [[a,b]..]}`. Requires covers.
std::string hasse_json(const LatticeUniverse& universe);

/// Graphviz digraph, one edge per cover from the less balanced element to
/// the more balanced one, so the top is drawn at the top. Requires covers.
std::string hasse_dot(const LatticeUniverse& universe);

}  // namespace imbalance
