// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfrac/tree_polynomials.hpp"

namespace tfrac {
namespace {

constexpr std::array<Traversal, 3> kTernaryTraversals{Traversal::preorder, Traversal::postorder, Traversal::lrmr};

Poly fold_master(const Poly& q) {
  return specialize(q, family_resolver({{"a", Poly::symbol("x1")},
                                        {"b", Poly::symbol("y1")},
                                        {"c", Poly::symbol("x2")},
                                        {"d", Poly::symbol("y2")},
                                        {"f", Poly::symbol("w")}}));
}

TEST(TreePolynomials, UnitWeightsCountTrees) {
  const SimpleWeights ones = SimpleWeights::ones();
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(p_bt(n, ones), Poly(mpz_class(static_cast<unsigned long>(count_binary(n)))));
    EXPECT_EQ(p_rt(n, ones), Poly(mpz_class(static_cast<unsigned long>(count_rt(n)))));
  }
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(p_irt(n, ones), Poly(mpz_class(static_cast<unsigned long>(count_irt(n)))));
  }
}

TEST(TreePolynomials, SimpleWeightOfWorkedExample) {
  const BinaryTree t = parse_binary_tree("1(3(5(-,7),-),2(6,4(8,-)))");
  EXPECT_EQ(Poly(simple_weight(t.shape), 1), Poly::parse("x1^2*x2^2*y2*y1^3"));
}

TEST(TreePolynomials, MasterFoldsToSimple) {
  for (int n = 1; n <= 5; ++n) {
    for (Traversal a : kTernaryTraversals) EXPECT_EQ(fold_master(q_rt(n, a)), p_rt(n)) << "n=" << n;
    EXPECT_EQ(fold_master(q_bt(n, Traversal::inorder)), p_bt(n)) << "n=" << n;
  }
}

TEST(TreePolynomials, SingleVertexIsAnUncrossedLeaf) {
  EXPECT_EQ(q_bt(1, Traversal::preorder), Poly::symbol("b", 0, 0));
  EXPECT_EQ(q_rt(1, Traversal::lrmr), Poly::symbol("b", 0, 0));
}

TEST(TreePolynomials, PermutationMasterMatchesInorderTrees) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(p_perm_star(n), q_bt(n, Traversal::inorder)) << "n=" << n;
}

TEST(TreePolynomials, IrtMasterAtOnesCountsTrees) {
  for (Traversal a : kTernaryTraversals) {
    for (int n = 1; n <= 4; ++n) {
      const Poly q = q_irt(n, a);
      const Poly ones = specialize(q, [](const IndexedSymbol&) { return std::optional<Poly>(1); });
      EXPECT_EQ(ones, Poly(mpz_class(static_cast<unsigned long>(count_irt(n)))));
    }
  }
}

}  // namespace
}  // namespace tfrac
