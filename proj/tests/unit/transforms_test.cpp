#include <gtest/gtest.h>

#include "imbalance/lattice.hpp"
#include "imbalance/transforms.hpp"
#include "test_support.hpp"

namespace imbalance {
namespace {

using testing::seq;

TEST(ExpansionAt, Examples) {
  EXPECT_EQ(expansion_at(seq({1, 2, 3, 4, 4}), 5), seq({1, 2, 3, 4, 5, 5}));
  EXPECT_EQ(expansion_at(seq({1, 2, 3, 4, 4}), 3), seq({1, 2, 4, 4, 4, 4}));
  EXPECT_EQ(expansion_at(seq({2, 2, 2, 2}), 1), seq({2, 2, 2, 3, 3}));
}

TEST(ExpansionAt, PositionOutOfRange) {
  for (const std::size_t bad : {std::size_t{0}, std::size_t{6}}) {
    try {
      expansion_at(seq({1, 2, 3, 4, 4}), bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PositionOutOfRange);
    }
  }
}

TEST(UpperExpansion, Examples) {
  EXPECT_EQ(upper_expansion(seq({0})), seq({1, 1}));
  EXPECT_EQ(upper_expansion(seq({1, 2, 3, 4, 4})), seq({1, 2, 3, 4, 5, 5}));
  EXPECT_EQ(upper_expansion(seq({2, 2, 2, 2})), seq({2, 2, 2, 3, 3}));
}

TEST(LowerExpansion, Examples) {
  EXPECT_EQ(lower_expansion(seq({1, 2, 3, 4, 4})), seq({1, 2, 4, 4, 4, 4}));
  EXPECT_EQ(lower_expansion(seq({2, 2, 2, 2})), seq({2, 2, 2, 3, 3}));
  EXPECT_EQ(lower_expansion(seq({1, 3, 3, 3, 3})), seq({2, 2, 3, 3, 3, 3}));
  EXPECT_EQ(lower_expansion(seq({0})), seq({1, 1}));
}

TEST(Contraction, Examples) {
  EXPECT_EQ(contraction(seq({1, 2, 3, 4, 4})), seq({1, 2, 3, 3}));
  EXPECT_EQ(contraction(seq({1, 3, 3, 3, 3})), seq({1, 2, 3, 3}));
  EXPECT_EQ(contraction(seq({2, 2, 3, 3, 3, 4, 4})), seq({2, 2, 3, 3, 3, 3}));
  EXPECT_EQ(contraction(seq({1, 1})), seq({0}));
}

TEST(Contraction, SingletonRejected) {
  try {
    contraction(seq({0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingletonSequence);
  }
}

TEST(Contraction, RoundTripAtMergedLeaf) {
  EXPECT_EQ(contraction_position(seq({1, 3, 3, 3, 3})), 2u);
  EXPECT_EQ(contraction_position(seq({2, 2, 2, 2})), 1u);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const auto& l : enumerate(n).elements()) {
      EXPECT_EQ(expansion_at(contraction(l), contraction_position(l)), l) << l.to_string();
    }
  }
}

TEST(Transforms, SandwichExhaustive) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const auto& l : enumerate(n).elements()) {
      const PathLengthSequence c = contraction(l);
      EXPECT_TRUE(more_balanced_or_equal(lower_expansion(c), l)) << l.to_string();
      EXPECT_TRUE(more_balanced_or_equal(l, upper_expansion(c))) << l.to_string();
    }
  }
}

TEST(Transforms, ConstancyLawExhaustive) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& l : enumerate(n).elements()) {
      EXPECT_EQ(l.is_constant(), lower_expansion(l) == upper_expansion(l)) << l.to_string();
    }
  }
}

TEST(Transforms, ExpansionMonotoneExhaustive) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto universe = enumerate(n).elements();
    for (const auto& l : universe) {
      for (const auto& h : universe) {
        if (!more_balanced_or_equal(l, h)) continue;
        EXPECT_TRUE(more_balanced_or_equal(lower_expansion(l), lower_expansion(h)));
        EXPECT_TRUE(more_balanced_or_equal(upper_expansion(l), upper_expansion(h)));
      }
    }
  }
}

TEST(UpperLowerExpansion, WorkedInstance) {
  const auto l = seq({2, 2, 3, 3, 3, 3});
  const auto h = seq({1, 2, 3, 4, 5, 5});
  ASSERT_TRUE(more_balanced_or_equal(l, h));
  EXPECT_EQ(upper_expansion(l), seq({2, 2, 3, 3, 3, 4, 4}));
  EXPECT_EQ(lower_expansion(h), seq({1, 2, 3, 5, 5, 5, 5}));
  EXPECT_TRUE(more_balanced_or_equal(upper_expansion(l), lower_expansion(h)));
}

TEST(UpperLowerExpansion, Exhaustive) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto universe = enumerate(n).elements();
    for (const auto& l : universe) {
      for (const auto& h : universe) {
        if (!more_balanced_or_equal(l, h) || l.last() >= h.last()) continue;
        EXPECT_TRUE(more_balanced_or_equal(upper_expansion(l), lower_expansion(h)))
            << l.to_string() << " / " << h.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace imbalance
