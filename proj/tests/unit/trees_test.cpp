#include <gtest/gtest.h>

#include <set>

#include "imbalance/lattice.hpp"
#include "imbalance/trees.hpp"
#include "test_support.hpp"

namespace imbalance {
namespace {

using testing::seq;
using Words = std::vector<std::string>;

TEST(CanonicalCode, Examples) {
  EXPECT_EQ(canonical_code(seq({1, 1})), (Words{"0", "1"}));
  EXPECT_EQ(canonical_code(seq({1, 2, 2})), (Words{"0", "10", "11"}));
  EXPECT_EQ(canonical_code(seq({1, 2, 3, 3})), (Words{"0", "10", "110", "111"}));
  EXPECT_EQ(canonical_code(seq({0})), (Words{""}));
  EXPECT_EQ(canonical_code(seq({2, 2, 2, 3, 3})), (Words{"00", "01", "10", "110", "111"}));
}

TEST(CanonicalCode, PrefixFreeWithExactLengths) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& l : enumerate(n).elements()) {
      const Words code = canonical_code(l);
      ASSERT_EQ(code.size(), l.size());
      for (std::size_t i = 0; i < code.size(); ++i) {
        EXPECT_EQ(code[i].size(), l.components()[i]);
        for (std::size_t k = 0; k < code.size(); ++k) {
          if (k != i) EXPECT_NE(code[k].rfind(code[i], 0), 0u) << l.to_string();
        }
      }
      EXPECT_TRUE(std::is_sorted(code.begin(), code.end()));
    }
  }
}

TEST(Tree, RoundTrips) {
  EXPECT_EQ(sequence_from_tree(tree_from_sequence(seq({0}))), seq({0}));
  const CodeTree complete = tree_from_sequence(seq({2, 2, 2, 2}));
  EXPECT_EQ(complete.node_count(), 7u);
  EXPECT_EQ(sequence_from_tree(complete), seq({2, 2, 2, 2}));
  for (const auto& l : enumerate(8).elements()) {
    const CodeTree t = tree_from_sequence(l);
    EXPECT_EQ(sequence_from_tree(t), l);
    EXPECT_EQ(tree_from_sequence(sequence_from_tree(t)), t);
    EXPECT_EQ(t.codewords(), canonical_code(l));
  }
}

TEST(Tree, NonCanonicalTreeGivesSortedDepths) {
  // Deep leaf on the left: leaves "00", "01", "1".
  const CodeTree t({{1, 4}, {2, 3}, {}, {}, {}});
  EXPECT_EQ(sequence_from_tree(t), seq({1, 2, 2}));
  EXPECT_EQ(t.codewords(), (Words{"00", "01", "1"}));
}

TEST(Tree, MalformedTrees) {
  const auto code_of = [](auto&& make) {
    try {
      make();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  // Single child.
  EXPECT_EQ(code_of([] { sequence_from_tree(CodeTree({{1, CodeTree::kNone}, {}})); }),
            ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree({{5, 1}, {}}); }), ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree({{1, 1}, {}}); }), ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree({{}, {}}); }), ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree(std::vector<CodeTree::Node>{}); }), ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree::from_codewords({"0", "01"}); }), ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree::from_codewords({"01", "0"}); }), ErrorCode::MalformedTree);
  EXPECT_EQ(code_of([] { CodeTree::from_codewords({"0", "2"}); }), ErrorCode::MalformedTree);
}

TEST(NodesWithinDepth, Examples) {
  EXPECT_EQ(nodes_within_depth(seq({2, 2, 2, 2}), 2), 7u);
  // Root, "0", "1".
  EXPECT_EQ(nodes_within_depth(seq({1, 2, 2}), 1), 3u);
  // Root, "0", "1", "10", "11".
  EXPECT_EQ(nodes_within_depth(seq({1, 2, 3, 3}), 2), 5u);
  EXPECT_EQ(nodes_within_depth(seq({1, 2, 3, 3}), 0), 1u);
  EXPECT_EQ(nodes_within_depth(seq({1, 2, 3, 3}), 9), 7u);
  EXPECT_EQ(nodes_within_depth(seq({0}), 0), 1u);
}

// Counting only nodes on root-to-leaf paths of length <= d is not antitone,
// which is why nodes_within_depth counts every node above the cut.
TEST(NodesWithinDepth, LeafPathReadingIsNotMonotone) {
  const auto leaf_path_nodes = [](const PathLengthSequence& l, std::size_t d) {
    std::set<std::string> prefixes;
    for (const std::string& w : canonical_code(l)) {
      if (w.size() > d) continue;
      for (std::size_t k = 0; k <= w.size(); ++k) prefixes.insert(w.substr(0, k));
    }
    return prefixes.size();
  };
  const auto low = seq({2, 2, 2, 2});
  const auto high = seq({1, 2, 3, 3});
  ASSERT_TRUE(strictly_more_balanced(low, high));
  EXPECT_LT(leaf_path_nodes(low, 1), leaf_path_nodes(high, 1));
  EXPECT_GE(nodes_within_depth(low, 1), nodes_within_depth(high, 1));
}

TEST(NodesWithinDepth, AntitoneExhaustive) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto u = enumerate(n).elements();
    for (const auto& l : u) {
      for (const auto& h : u) {
        if (!more_balanced_or_equal(l, h)) continue;
        for (std::size_t d = 0; d <= n; ++d) {
          EXPECT_GE(nodes_within_depth(l, d), nodes_within_depth(h, d));
        }
      }
    }
  }
}

TEST(SumComponents, Examples) {
  EXPECT_EQ(sum_components(seq({0})), 0u);
  EXPECT_EQ(sum_components(seq({1, 2, 3, 3})), 9u);
  EXPECT_EQ(sum_components(seq({2, 2, 2, 3, 3})), 12u);
  EXPECT_EQ(sum_components(seq({1, 3, 3, 3, 3})), 13u);
  EXPECT_EQ(sum_components(seq({1, 2, 3, 4, 4})), 14u);
}

TEST(SumComponents, StrictlyMonotoneExhaustive) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto u = enumerate(n).elements();
    for (const auto& l : u) {
      for (const auto& h : u) {
        if (strictly_more_balanced(l, h)) EXPECT_LT(sum_components(l), sum_components(h));
      }
    }
  }
}

TEST(Rendering, DotAndAscii) {
  const CodeTree t = tree_from_sequence(seq({1, 2, 2}));
  const std::string dot = tree_dot(t);
  EXPECT_NE(dot.find("label=\"0 (d=1)\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"11 (d=2)\""), std::string::npos);
  EXPECT_NE(dot.find("shape=point"), std::string::npos);
  EXPECT_EQ(tree_ascii(t), "*\n  0 (d=1)\n  1 *\n    10 (d=2)\n    11 (d=2)\n");
  EXPECT_EQ(tree_ascii(tree_from_sequence(seq({0}))), "leaf (d=0)\n");
}

}  // namespace
}  // namespace imbalance
