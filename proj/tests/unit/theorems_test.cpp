// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <string>

#include "test_support.hpp"
#include "tfrac/theorems.hpp"

namespace tfrac {
namespace {

TEST(Theorems, IdsRoundtripThroughNames) {
  EXPECT_EQ(all_theorems().size(), 30U);
  for (TheoremId id : all_theorems()) {
    EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    EXPECT_FALSE(describe(id).empty());
    EXPECT_GE(default_order(id), 5U);
  }
  EXPECT_THROW(parse_theorem_id("thm-unknown"), UnknownTheorem);
}

TEST(Theorems, MasterPlanSplitsSymbolicAndPrime) {
  VerifySpec spec;
  spec.theorem = TheoremId::thm_rt_master_t;
  spec.order = 6;
  const TheoremReport r = verify(spec);
  EXPECT_TRUE(r.pass) << r.detail;
  ASSERT_EQ(r.checks.size(), 2U);
  EXPECT_EQ(r.checks[0].order, kSymbolicMasterOrder);
  EXPECT_EQ(r.checks[0].evaluation, Evaluation::symbolic);
  EXPECT_EQ(r.checks[1].evaluation, Evaluation::prime_specialized);
}

TEST(Theorems, SpecializationAppliesToBothSides) {
  VerifySpec spec;
  spec.theorem = TheoremId::thm_rt_simple_j;
  spec.order = 5;
  spec.specialization = Substitution{{IndexedSymbol("x1"), Poly(1)}, {IndexedSymbol("w"), Poly(0)}};
  EXPECT_TRUE(verify(spec).pass);
}

TEST(Theorems, InorderOnTernaryTreesFailsCleanly) {
  VerifySpec spec;
  spec.theorem = TheoremId::thm_rt_master_t;
  spec.order = 3;
  spec.traversal = Traversal::inorder;
  const TheoremReport r = verify(spec);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.detail.find("exception"), std::string::npos);
}

TEST(Theorems, EveryDefaultSpecPasses) {
  const auto specs = default_specs();
  const auto reports = verify_all(specs);
  ASSERT_EQ(reports.size(), specs.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].theorem, specs[i].theorem);
    EXPECT_TRUE(reports[i].pass) << to_string(reports[i].theorem) << ": " << reports[i].detail;
  }
}

}  // namespace
}  // namespace tfrac
