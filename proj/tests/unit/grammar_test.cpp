// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tfrac/grammar.hpp"

namespace tfrac {
namespace {

TEST(Grammar, DerivationObeysLeibniz) {
  const DerivativeOperator d = dumont_operator();
  const Poly x = Poly::symbol("x");
  const Poly y = Poly::symbol("y");
  EXPECT_EQ(d.apply(x), Poly::parse("2*x*y"));
  EXPECT_EQ(d.apply(y), x);
  const Poly f = Poly::parse("x^2*y + 3*y^3");
  const Poly g = Poly::parse("x - y^2");
  EXPECT_EQ(d.apply(f * g), d.apply(f) * g + f * d.apply(g));
  EXPECT_EQ(d.apply(Poly(7)), Poly());
}

TEST(Grammar, IterateRepeatsApply) {
  const DerivativeOperator d = tree_operator(SimpleFamily::bt);
  const Poly seed = Poly::symbol("y1");
  EXPECT_EQ(d.iterate(seed, 3), d.apply(d.apply(d.apply(seed))));
  EXPECT_EQ(d.iterate(seed, 0), seed);
}

TEST(Grammar, TreeOperatorsGenerateTreePolynomials) {
  EXPECT_TRUE(check_grammar(SimpleFamily::bt, 6).pass);
  EXPECT_TRUE(check_grammar(SimpleFamily::rt, 6).pass);
  EXPECT_EQ(tree_operator(SimpleFamily::bt).iterate(Poly::symbol("y1"), 2), p_bt(3));
  EXPECT_EQ(tree_operator(SimpleFamily::rt).iterate(Poly::symbol("y1"), 2), p_rt(3));
}

TEST(Grammar, DumontSpecialization) { EXPECT_TRUE(check_dumont_specialization(6).pass); }

TEST(Grammar, RulesPrint) {
  EXPECT_NE(dumont_operator().str().find("x -> 2*x*y"), std::string::npos);
}

}  // namespace
}  // namespace tfrac
