#include <gtest/gtest.h>

#include "imbalance/irreducibility.hpp"
#include "test_support.hpp"

namespace imbalance {
namespace {

using testing::depths;
using testing::seq;

TEST(NearConstant, Examples) {
  EXPECT_TRUE(is_near_constant(depths({3, 3, 3})).verdict);
  const NearConstancy two = is_near_constant(depths({2, 2, 3, 3, 3}));
  EXPECT_TRUE(two.verdict);
  EXPECT_EQ(two.values, depths({2, 3}));
  const NearConstancy three = is_near_constant(depths({1, 2, 3}));
  EXPECT_FALSE(three.verdict);
  EXPECT_EQ(three.values, depths({1, 2, 3}));
  EXPECT_TRUE(is_near_constant({}).verdict);
  EXPECT_FALSE(is_near_constant(depths({1, 3})).verdict);
}

TEST(DecomposeUvw, Examples) {
  const auto a = decompose_uvw(seq({1, 2, 3, 4, 4}));
  EXPECT_EQ(a.u, depths({1, 2}));
  EXPECT_TRUE(a.v.empty());
  EXPECT_EQ(a.w, depths({3, 4, 4}));
  EXPECT_TRUE(a.all_conditions());

  const auto b = decompose_uvw(seq({1, 3, 3, 3, 4, 5, 5}));
  EXPECT_EQ(b.u, depths({1}));
  EXPECT_EQ(b.v, depths({3, 3, 3}));
  EXPECT_EQ(b.w, depths({4, 5, 5}));
  EXPECT_FALSE(b.segments_shaped);

  const auto c = decompose_uvw(seq({2, 2, 3, 3, 3, 4, 4}));
  EXPECT_EQ(c.u, depths({2, 2, 3, 3, 3}));
  EXPECT_TRUE(c.v.empty());
  EXPECT_EQ(c.w, depths({4, 4}));
  EXPECT_TRUE(c.all_conditions());
}

TEST(DecomposeUvw, DeepRunSeparationCanFail) {
  // w = (4,4,4,4,4,5,5) opens with a pair at 4 < last(uv) + 2 = 5.
  const auto d = decompose_uvw(seq({1, 3, 4, 4, 4, 4, 4, 5, 5}));
  EXPECT_EQ(d.u, depths({1}));
  EXPECT_EQ(d.v, depths({3}));
  EXPECT_EQ(d.w, depths({4, 4, 4, 4, 4, 5, 5}));
  EXPECT_TRUE(d.segments_shaped);
  EXPECT_TRUE(d.prefix_nonempty);
  EXPECT_FALSE(d.deep_run_separated);
  EXPECT_FALSE(is_join_irreducible_by_uvw(seq({1, 3, 4, 4, 4, 4, 4, 5, 5})));
  EXPECT_FALSE(is_join_irreducible_bruteforce(seq({1, 3, 4, 4, 4, 4, 4, 5, 5}), hasse(9)));
}

TEST(DecomposeUvw, ConcatenationIdentity) {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (const auto& l : enumerate(n).elements()) {
      const auto d = decompose_uvw(l);
      std::vector<Depth> joined = d.u;
      joined.insert(joined.end(), d.v.begin(), d.v.end());
      joined.insert(joined.end(), d.w.begin(), d.w.end());
      EXPECT_EQ(joined, testing::to_vector(l));
      EXPECT_FALSE(d.u.empty());
      EXPECT_TRUE(d.prefix_nonempty);
    }
  }
}

TEST(Bruteforce, Examples) {
  const LatticeUniverse h = hasse(7);
  EXPECT_TRUE(is_join_irreducible_bruteforce(seq({2, 2, 2, 4, 4, 4, 4}), h));
  EXPECT_FALSE(is_join_irreducible_bruteforce(seq({1, 3, 3, 3, 4, 5, 5}), h));
  EXPECT_FALSE(is_join_irreducible_bruteforce(seq({2, 3, 3, 3, 3, 3, 3}), h));
  const auto unique = h.lower_covers(*h.index_of(seq({2, 2, 2, 4, 4, 4, 4})));
  ASSERT_EQ(unique.size(), 1u);
  EXPECT_EQ(h.elements()[unique[0]], seq({2, 2, 3, 3, 3, 4, 4}));
}

TEST(Bruteforce, ElementNotInUniverse) {
  try {
    is_join_irreducible_bruteforce(seq({1, 2, 2}), hasse(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ElementNotInUniverse);
  }
}

TEST(ByBalancing, Examples) {
  EXPECT_FALSE(is_join_irreducible_by_balancing(seq({1, 3, 3, 3, 4, 5, 5})));
  EXPECT_EQ(compare(bal(seq({1, 3, 3, 3, 4, 5, 5}), 2), bal(seq({1, 3, 3, 3, 4, 5, 5}), 6)),
            OrderVerdict::Incomparable);
  EXPECT_TRUE(is_join_irreducible_by_balancing(seq({1, 2, 3, 4, 4})));
  EXPECT_FALSE(is_join_irreducible_by_balancing(seq({2, 2, 3, 3, 3, 3})));
}

TEST(ByUvw, Examples) {
  EXPECT_TRUE(is_join_irreducible_by_uvw(seq({1, 2, 4, 4, 4, 5, 5})));
  EXPECT_TRUE(is_join_irreducible_by_uvw(seq({1, 3, 3, 4, 4, 4, 4})));
  EXPECT_FALSE(is_join_irreducible_by_uvw(seq({1, 3, 3, 3, 4, 5, 5})));
  EXPECT_FALSE(is_join_irreducible_by_uvw(seq({2, 2, 3, 3, 3, 3})));
  EXPECT_FALSE(is_join_irreducible_by_uvw(seq({0})));
}

TEST(Irreducibility, TripleAgreementExhaustive) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const LatticeUniverse h = hasse(n);
    for (const auto& l : h.elements()) {
      const bool covers = is_join_irreducible_bruteforce(l, h);
      EXPECT_EQ(covers, is_join_irreducible_by_balancing(l)) << l.to_string();
      EXPECT_EQ(covers, is_join_irreducible_by_uvw(l)) << l.to_string();
    }
  }
}

TEST(Irreducibility, SevenElementsAtSeven) {
  const LatticeUniverse h = hasse(7);
  std::vector<PathLengthSequence> reducible;
  for (const auto& l : h.elements()) {
    if (!is_join_irreducible_bruteforce(l, h)) reducible.push_back(l);
  }
  EXPECT_EQ(reducible,
            (std::vector<PathLengthSequence>{seq({1, 3, 3, 3, 4, 5, 5}), seq({2, 3, 3, 3, 3, 3, 3})}));
}

TEST(Irreducibility, FirstBalancingStepIsTheLowerCover) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const LatticeUniverse h = hasse(n);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& l = h.elements()[i];
      const auto lower = h.lower_covers(i);
      if (lower.size() != 1) continue;
      EXPECT_EQ(bal(l, excess_indices(l).front()), h.elements()[lower[0]]) << l.to_string();
    }
  }
}

}  // namespace
}  // namespace imbalance
