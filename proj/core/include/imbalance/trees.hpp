#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "imbalance/sequence.hpp"

namespace imbalance {

/// Ordered binary tree stored as a node arena; node 0 is the root.
/// Structural sanity (indices in range, every non-root node reached exactly
/// once) is checked on construction. Fullness is not: a node with a single
/// child is representable and rejected by sequence_from_tree().
class CodeTree {
 public:
  static constexpr std::int32_t kNone = -1;

  struct Node {
    std::int32_t left = kNone;
    std::int32_t right = kNone;

    bool is_leaf() const noexcept { return left == kNone && right == kNone; }

    friend bool operator==(const Node&, const Node&) = default;
  };

  /// Throws MalformedTree on out-of-range children, sharing, cycles or
  /// unreachable nodes.
  explicit CodeTree(std::vector<Node> nodes);

  /// Trie of a prefix-free set of binary codewords. Throws MalformedTree if
  /// the set is not prefix-free or contains a non-binary character.
  static CodeTree from_codewords(const std::vector<std::string>& codewords);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// Leaf codewords in left-to-right order ("0" = left).
  std::vector<std::string> codewords() const;

  friend bool operator==(const CodeTree&, const CodeTree&) = default;

 private:
  std::vector<Node> nodes_;
};

/// Canonical prefix code: the first codeword is l_1 zeros, each next one is
/// the previous plus one, shifted left to the next length.
std::vector<std::string> canonical_code(const PathLengthSequence& l);

/// Trie of canonical_code(l): the leftmost-shallowest tree for l.
CodeTree tree_from_sequence(const PathLengthSequence& l);

/// Sorted leaf depths. Throws MalformedTree if some node has one child.
PathLengthSequence sequence_from_tree(const CodeTree& tree);

/// Number of nodes of tree_from_sequence(l) at depth <= `depth`, i.e. the
/// distinct codeword prefixes (root included) of length at most `depth`.
/// Never increases when l moves up in the imbalance order.
///
/// Counting only nodes on paths to leaves of depth <= `depth` would not be
/// monotone: at depth 1, (2,2,2,2) has none while the less balanced
/// (1,2,3,3) has two.
std::size_t nodes_within_depth(const PathLengthSequence& l, std::size_t depth);

/// Sum of components.
std::uint64_t sum_components(const PathLengthSequence& l);

/// Graphviz digraph; internal nodes are unlabeled points, leaves carry
/// "codeword (d=depth)".
std::string tree_dot(const CodeTree& tree);

/// Indented terminal rendering, one line per node.
std::string tree_ascii(const CodeTree& tree);

}  // namespace imbalance
