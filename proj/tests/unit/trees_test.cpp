// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "test_support.hpp"
#include "tfrac/trees.hpp"

namespace tfrac {
namespace {

constexpr std::array<Traversal, 3> kTernaryTraversals{Traversal::preorder, Traversal::postorder, Traversal::lrmr};

TEST(Trees, CountsMatchEnumeration) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(all_trees(Family::binary, n).size(), count_binary(n));
    EXPECT_EQ(all_trees(Family::ternary, n).size(), count_rt(n));
    std::uint64_t irts = 0;
    for_each_irt(n, [&](const IntervalTree&) { ++irts; });
    EXPECT_EQ(irts, count_irt(n));
  }
}

TEST(Trees, ParallelReductionIsDeterministic) {
  const auto count = [](int n) {
    return reduce_trees(
        Family::ternary, n, std::uint64_t{0}, [](std::uint64_t& acc, const TreeShape&) { ++acc; },
        [](std::uint64_t a, std::uint64_t b) { return a + b; });
  };
  EXPECT_EQ(count(7), count_rt(7));
  EXPECT_EQ(count(7), count(7));
}

TEST(Trees, LevelSplitsIntoCrossingsAndNestings) {
  for (Traversal a : kTernaryTraversals) {
    for_each_tree(Family::ternary, 6, [&](const TreeShape& s) {
      const auto lev = levels(s);
      const auto stats = vertex_stats(s, a);
      for (int v = 0; v < s.size(); ++v) {
        ASSERT_EQ(stats[v].lev, lev[v]);
        ASSERT_EQ(stats[v].croix + stats[v].nid, lev[v]);
      }
    });
  }
}

TEST(Trees, TraversalsAreConsistentUnderPrefixes) {
  for (Traversal a : kTernaryTraversals) {
    for_each_tree(Family::ternary, 6, [&](const TreeShape& s) {
      for (int count = 1; count < s.size(); ++count) {
        std::vector<int> restricted;
        for (int v : traversal_order(s, a)) {
          if (v < count) restricted.push_back(v);
        }
        ASSERT_EQ(traversal_order(s.prefix(count), a), restricted);
      }
    });
  }
}

TEST(Trees, InorderRejectsMiddleChildren) {
  const RestrictedTernaryTree t = parse_rt("1(-,2,-)");
  EXPECT_THROW(traversal_order(t.shape, Traversal::inorder), ArityMismatch);
}

TEST(Trees, TextRoundtrip) {
  for_each_tree(Family::binary, 5, [](const TreeShape& s) {
    const BinaryTree t{s};
    ASSERT_EQ(parse_binary_tree(to_text(t)), t);
  });
  for_each_tree(Family::ternary, 5, [](const TreeShape& s) {
    const RestrictedTernaryTree t{s};
    ASSERT_EQ(parse_rt(to_text(t)), t);
  });
  for_each_irt(4, [](const IntervalTree& t) { ASSERT_EQ(parse_irt(to_text(t)), t); });
}

TEST(Trees, ValidationRejectsBadTrees) {
  EXPECT_THROW(parse_binary_tree("2(1,-)"), InvalidTree);
  EXPECT_THROW(parse_rt("1(2,3,-)"), InvalidTree);
  EXPECT_THROW(parse_irt("[0,1]([3,4],-,-)"), InvalidTree);
}

TEST(Trees, MultilabeledRoundtrip) {
  for (int n = 1; n <= 6; ++n) {
    for_each_tree(Family::ternary, n, [](const TreeShape& s) {
      const RestrictedTernaryTree t{s};
      const MultiLabeledBinaryTree m = rt_to_multilabeled(t);
      validate(m);
      ASSERT_EQ(multilabeled_to_rt(m), t);
    });
  }
  std::uint64_t count = 0;
  for_each_multilabeled(5, [&](const MultiLabeledBinaryTree&) { ++count; });
  EXPECT_EQ(count, count_rt(5));
}

TEST(Trees, IrtSurplusLandsOnlyWhereAllowed) {
  for_each_irt(5, [](const IntervalTree& t) {
    validate(t);
    EXPECT_EQ(t.max_label(), 5);
    EXPECT_EQ(t.labels.front().lo, 0);
    for (int v = 0; v < t.shape.size(); ++v) {
      if (t.shape.has_middle_child(v)) {
        EXPECT_EQ(t.labels[v].surplus(), 0);
      }
    }
  });
}

TEST(Trees, NodeTypeHistogram) {
  const BinaryTree t = parse_binary_tree("1(3(5(-,7),-),2(6,4(8,-)))");
  const std::map<std::string, int> expected{{"00", 3}, {"01", 1}, {"10", 2}, {"11", 2}};
  EXPECT_EQ(node_type_counts(t.shape, Family::binary, false), expected);
}

}  // namespace
}  // namespace tfrac
