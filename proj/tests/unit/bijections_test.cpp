// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "test_support.hpp"
#include "tfrac/bijections.hpp"

namespace tfrac {
namespace {

constexpr std::array<Traversal, 3> kTernaryTraversals{Traversal::preorder, Traversal::postorder, Traversal::lrmr};

TEST(Bijections, MotzkinRoundtripAndLaws) {
  for (Traversal a : kTernaryTraversals) {
    const CheckReport r = check_motzkin_bijection(6, a);
    EXPECT_TRUE(r.pass) << to_string(a) << ": " << r.detail;
  }
}

TEST(Bijections, SchroderRoundtripAndWeights) {
  for (Traversal a : kTernaryTraversals) {
    const CheckReport r = check_schroder_bijection(4, a);
    EXPECT_TRUE(r.pass) << to_string(a) << ": " << r.detail;
    const CheckReport w = check_schroder_weights(4, a);
    EXPECT_TRUE(w.pass) << to_string(a) << ": " << w.detail;
  }
}

TEST(Bijections, WorkedExampleSchroderPath) {
  const IntervalTree t = parse_irt(
      "[0,1]([2,3](4(8(-,-,9(-,[14,15],-)),-,-),-,5(7(-,10,-),-,6(-,11(-,[12,13](-,-,16),-),-))),-,-)");
  const LabeledPath lp = irt_to_labeled_schroder(t, Traversal::preorder);
  EXPECT_EQ(lp.path.str(), "LUULUUDUULLDULDDLDLUDLDD");
  EXPECT_EQ(schroder_segments(lp.path).size(), t.labels.size());
  validate(lp, LabelSets::interval_ternary());
  EXPECT_EQ(labeled_schroder_to_irt(lp, Traversal::preorder), t);
}

TEST(Bijections, MotzkinPathHeightsFollowLevels) {
  for_each_tree(Family::ternary, 6, [](const TreeShape& s) {
    const RestrictedTernaryTree t{s};
    const LabeledPath lp = rt_to_labeled_motzkin(t, Traversal::preorder);
    ASSERT_EQ(lp.path.length(), s.size() - 1);
    validate(lp.path);
    validate(lp, LabelSets::restricted_ternary());
  });
}

TEST(Bijections, PermutationRoundtrip) {
  std::vector<int> word(6);
  std::iota(word.begin(), word.end(), 1);
  do {
    const Permutation sigma(word);
    ASSERT_EQ(bt_to_permutation(permutation_to_bt(sigma)), sigma);
  } while (std::next_permutation(word.begin(), word.end()));
  EXPECT_TRUE(check_permutation_bijection(6).pass);
}

TEST(Bijections, WorkedExamplePermutation) {
  EXPECT_EQ(bt_to_permutation(parse_binary_tree("1(3(5(-,7),-),2(6,4(8,-)))")).str(), "57316284");
}

TEST(SlottedTree, RejectsOutOfRangeRanks) {
  SlottedTree t;
  EXPECT_EQ(t.open_slots(), 1);
  t.fill(0, NodeType{true, false, true}, Traversal::preorder);
  EXPECT_EQ(t.open_slots(), 2);
  EXPECT_THROW(t.fill(2, NodeType{}, Traversal::preorder), LabelOutOfRange);
  t.fill(1, NodeType{}, Traversal::preorder);
  t.fill(0, NodeType{}, Traversal::preorder);
  EXPECT_EQ(t.open_slots(), 0);
  EXPECT_EQ(t.tree().size(), 3);
}

}  // namespace
}  // namespace tfrac
