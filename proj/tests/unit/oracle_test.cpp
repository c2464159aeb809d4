#include <gtest/gtest.h>

#include "json.hpp"

#include "imbalance/lattice.hpp"
#include "imbalance/oracle/oracle.hpp"
#include "imbalance/oracle/verify.hpp"
#include "test_support.hpp"

namespace imbalance {
namespace {

using testing::seq;

TEST(EnumerateByPartition, Examples) {
  EXPECT_EQ(oracle::enumerate_by_partition(3, 20), (std::vector{seq({1, 2, 2})}));
  EXPECT_EQ(oracle::enumerate_by_partition(5, 20),
            (std::vector{seq({1, 2, 3, 4, 4}), seq({1, 3, 3, 3, 3}), seq({2, 2, 2, 3, 3})}));
  EXPECT_EQ(oracle::enumerate_by_partition(10, 20).size(), 50u);
  EXPECT_THROW(oracle::enumerate_by_partition(11, 10), Error);
}

TEST(EnumerateByPartition, MatchesExpansionClosure) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(oracle::enumerate_by_partition(n, 20), enumerate(n).elements()) << n;
  }
}

TEST(OracleLeq, AgreesWithCompare) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto u = enumerate(n).elements();
    for (const auto& a : u) {
      for (const auto& b : u) EXPECT_EQ(oracle::leq(a, b), more_balanced_or_equal(a, b));
    }
  }
}

TEST(BruteforceBounds, Examples) {
  const auto u = oracle::enumerate_by_partition(7, 20);
  EXPECT_EQ(oracle::join_bruteforce(seq({2, 2, 2, 3, 4, 5, 5}), seq({1, 3, 3, 4, 4, 4, 4}), u),
            seq({1, 3, 3, 3, 4, 5, 5}));
  EXPECT_EQ(oracle::meet_bruteforce(seq({2, 2, 2, 3, 4, 5, 5}), seq({1, 3, 3, 4, 4, 4, 4}), u),
            seq({2, 2, 2, 4, 4, 4, 4}));
  for (const auto& x : u) EXPECT_EQ(oracle::meet_bruteforce(bottom(7), x, u), bottom(7));
}

TEST(BruteforceBounds, NotALatticeOnAnAntichain) {
  // The two incomparable middle elements alone have no common lower bound.
  const std::vector<PathLengthSequence> antichain{seq({1, 3, 3, 4, 4, 4, 4}),
                                                  seq({2, 2, 2, 3, 4, 5, 5})};
  try {
    oracle::meet_bruteforce(antichain[0], antichain[1], antichain);
    FAIL();
  } catch (const oracle::NotALattice& e) {
    EXPECT_TRUE(e.bounds().empty());
    EXPECT_EQ(e.first(), antichain[0]);
  }
}

TEST(ClosureEqualsOrder, SmallUniverses) {
  for (const std::size_t n : {1, 5, 7, 8}) {
    const auto report = oracle::closure_equals_order(n, 20);
    EXPECT_TRUE(report.equal()) << n;
    EXPECT_EQ(report.universe_size, enumerate(n).size());
  }
  EXPECT_EQ(oracle::closure_equals_order(5, 20).relation_size, 2u);
}

TEST(Verify, CatalogNamesAreStable) {
  std::vector<std::string> names;
  for (const auto& info : verify::property_catalog()) names.emplace_back(info.name);
  for (const char* required : {"upper-lower-expansion", "meet-oracle", "closure-equals-order",
                               "irreducibility-triple-agreement"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), required), names.end()) << required;
  }
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(Verify, EveryPropertyPassesThroughSeven) {
  const auto reports = verify::run(7);
  EXPECT_TRUE(verify::all_passed(reports)) << verify::format_text(reports);
  std::size_t expected = 0;
  for (const auto& info : verify::property_catalog()) expected += 7 - info.min_n + 1;
  EXPECT_EQ(reports.size(), expected);
}

TEST(Verify, SelectionAndUnknownNames) {
  const std::vector<std::string> pick{"sum-monotone"};
  const auto reports = verify::run(4, pick);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[3].n, 4u);
  const std::vector<std::string> bad{"no-such-property"};
  EXPECT_THROW(verify::run(4, bad), Error);
}

TEST(Verify, JsonReport) {
  const auto reports = verify::run(2, std::vector<std::string>{"constancy-law"});
  const auto doc = nlohmann::json::parse(verify::format_json(reports));
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0]["property"], "constancy-law");
  EXPECT_EQ(doc[0]["status"], "pass");
  EXPECT_TRUE(doc[0]["witness"].is_null());
  EXPECT_EQ(doc[1]["n"], 2);
}

TEST(Verify, FailingReportCarriesWitness) {
  verify::PropertyReport failed{"x", 3, false, 1, "1,2,2"};
  EXPECT_FALSE(verify::all_passed(std::vector{failed}));
  EXPECT_EQ(verify::format_text(std::vector{failed}), "FAIL  x  n=3  checked=1  witness: 1,2,2\n");
}

}  // namespace
}  // namespace imbalance
