#pragma once

#include <span>
#include <vector>

#include "imbalance/lattice.hpp"
#include "imbalance/sequence.hpp"

namespace imbalance {

struct NearConstancy {
  bool verdict = true;
  /// The distinct values present, ascending (at most two when verdict holds).
  std::vector<Depth> values;
};

/// At most two distinct values, and when there are two they differ by one.
/// Empty and constant segments qualify.
NearConstancy is_near_constant(std::span<const Depth> segment);

/// Greedy split l = u·v·w: u is the longest near-constant prefix of l, w the
/// longest near-constant suffix of what remains. The verdicts are the three
/// conditions of the uvw characterization of join-irreducibility.
struct UVWDecomposition {
  std::vector<Depth> u;
  std::vector<Depth> v;
  std::vector<Depth> w;

  /// u and w near-constant, v strictly increasing.
  bool segments_shaped = false;
  /// uv is nonempty.
  bool prefix_nonempty = false;
  /// If w is non-constant and opens with an equal pair, that value is at
  /// least last(uv) + 2.
  bool deep_run_separated = false;

  bool all_conditions() const noexcept {
    return segments_shaped && prefix_nonempty && deep_run_separated;
  }
};

UVWDecomposition decompose_uvw(const PathLengthSequence& l);

/// Exactly one lower cover in `universe`, which must carry cover edges.
/// Throws ElementNotInUniverse.
bool is_join_irreducible_bruteforce(const PathLengthSequence& l, const LatticeUniverse& universe);

/// With j the first excess index: bal[l,j] ⊵ bal[l,k] for every excess
/// index k. False for the bottom, which has no excess index.
bool is_join_irreducible_by_balancing(const PathLengthSequence& l);

/// Not near-constant, w nonempty, and decompose_uvw(l) meets every condition.
bool is_join_irreducible_by_uvw(const PathLengthSequence& l);

}  // namespace imbalance
