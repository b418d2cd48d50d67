// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tfrac/symbolic.hpp"

namespace tfrac {
namespace {

using testing::random_poly;

TEST(IndexedSymbol, TextRoundtrip) {
  for (const char* text : {"x1", "mu(3)", "a(2,1)", "bh(0,0)"}) {
    EXPECT_EQ(IndexedSymbol::parse(text).str(), text);
  }
  EXPECT_LT(IndexedSymbol("a", 0, 1), IndexedSymbol("a", 1, 0));
  EXPECT_THROW(IndexedSymbol("toolongname"), std::invalid_argument);
}

TEST(Poly, ParsePrintRoundtrip) {
  const Poly p = Poly::parse("3*x^2*y - (y - 1)*(y + 1) + a(0,1)");
  EXPECT_EQ(Poly::parse(p.str()), p);
  EXPECT_EQ(p.constant_term(), 1);
  EXPECT_EQ(Poly::parse("-x^2"), -Poly::symbol("x").pow(2));
  EXPECT_EQ(Poly::parse("2*-y^3"), Poly::parse("-2*y^3"));
  EXPECT_THROW(Poly::parse("x + * y"), ParseError);
  EXPECT_THROW(Poly::parse("(x"), ParseError);
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    const Poly c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(Poly::parse(a.str()), a);
  }
}

TEST(Poly, SpecializeIsAHomomorphism) {
  std::mt19937_64 rng(testing::kSeed + 1);
  const Substitution at{{IndexedSymbol("x"), Poly(2)}, {IndexedSymbol("y"), Poly::parse("z(1) - 3")}};
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    EXPECT_EQ(specialize(a * b, at), specialize(a, at) * specialize(b, at));
    EXPECT_EQ(specialize(a + b, at), specialize(a, at) + specialize(b, at));
  }
}

TEST(Poly, FamilyResolverIgnoresIndices) {
  const Poly p = Poly::parse("a(0,1)*a(2,0) + b(1,1)");
  const Poly q = specialize(p, family_resolver({{"a", Poly::symbol("x1")}}));
  EXPECT_EQ(q, Poly::parse("x1^2 + b(1,1)"));
}

TEST(Poly, ToIntegerRejectsSymbols) {
  EXPECT_EQ(Poly(42).to_integer(), 42);
  EXPECT_THROW((void)Poly::symbol("x").to_integer(), std::exception);
}

TEST(PrimeValuation, DistinctPrimesStableAcrossCalls) {
  PrimeValuation v;
  const auto x = v.value(IndexedSymbol("x"));
  const auto y = v.value(IndexedSymbol("y"));
  EXPECT_NE(x, y);
  EXPECT_EQ(v.value(IndexedSymbol("x")), x);
  EXPECT_NE(mpz_probab_prime_p(x.get_mpz_t(), 25), 0);
  EXPECT_NE(mpz_probab_prime_p(y.get_mpz_t(), 25), 0);
}

TEST(Series, InverseTimesSelfIsOne) {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 30; ++trial) {
    Series s(6);
    s[0] = 1;
    for (unsigned n = 1; n <= 6; ++n) s[n] = random_poly(rng);
    EXPECT_EQ(s * series_inverse(s), Series::one(6));
  }
}

TEST(Series, InverseRequiresUnitConstant) {
  EXPECT_THROW(series_inverse(Series::constant(3, 2)), NonUnitConstantTerm);
}

TEST(Series, GeometricSeries) {
  const Series g = Series::geometric(4, Poly::symbol("c"));
  for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(g[n], Poly::symbol("c").pow(n));
}

TEST(PolyAccumulator, MatchesRepeatedAddition) {
  std::mt19937_64 rng(testing::kSeed + 3);
  PolyAccumulator acc;
  Poly sum;
  for (int i = 0; i < 50; ++i) {
    const Poly p = random_poly(rng);
    acc.add(p);
    sum += p;
  }
  EXPECT_EQ(acc.to_poly(), sum);
}

}  // namespace
}  // namespace tfrac
