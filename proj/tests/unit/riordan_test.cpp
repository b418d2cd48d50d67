// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tfrac/riordan.hpp"

namespace tfrac {
namespace {

RationalSeries random_series(std::mt19937_64& rng, unsigned order, bool zero_constant) {
  std::uniform_int_distribution<long> draw(-5, 5);
  RationalSeries s(order);
  for (unsigned n = 0; n <= order; ++n) s.coeff(n) = draw(rng);
  if (zero_constant) {
    s.coeff(0) = 0;
    if (s.coeff(1) == 0) s.coeff(1) = 1;
  } else {
    s.coeff(0) = 1;
  }
  return s;
}

TEST(RationalSeries, InverseAndComposition) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalSeries f = random_series(rng, 7, false);
    const RationalSeries g = random_series(rng, 7, true);
    RationalSeries one(7);
    one.coeff(0) = 1;
    EXPECT_EQ(f * f.inverse(), one);
    // (f g)' = f' g + f g', truncated one order lower.
    const RationalSeries lhs = (f * g).derivative();
    const RationalSeries rhs = f.derivative() * g + f * g.derivative();
    for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(lhs.coeff(n), rhs.coeff(n));
  }
}

TEST(Riordan, ProductionMatrixInvertsOutputMatrix) {
  std::mt19937_64 rng(testing::kSeed + 1);
  std::uniform_int_distribution<long> draw(-4, 4);
  std::uniform_int_distribution<long> superdiagonal(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    constexpr std::size_t kSize = 7;
    RationalMatrix p(kSize + 1);
    for (std::size_t i = 0; i <= kSize; ++i) {
      for (std::size_t j = 0; j <= i; ++j) p(i, j) = draw(rng);
      if (i + 1 <= kSize) p(i, i + 1) = superdiagonal(rng);
    }
    ASSERT_TRUE(p.is_lower_hessenberg());
    const RationalMatrix lower = output_matrix(p, kSize);
    ASSERT_TRUE(lower.is_lower_triangular());
    EXPECT_EQ(production_matrix(lower), p.leading(kSize - 1));
  }
}

TEST(Riordan, SingularDiagonalIsReported) {
  RationalMatrix l = RationalMatrix::identity(3);
  l(1, 1) = 0;
  EXPECT_THROW(production_matrix(l), SingularDiagonal);
}

TEST(Riordan, EgfConversionsAreInverse) {
  std::mt19937_64 rng(testing::kSeed + 2);
  const RationalSeries s = random_series(rng, 8, false);
  EXPECT_EQ(ordinary_to_egf(egf_to_ordinary(s)), s);
}

TEST(Riordan, RandomExponentialArrays) {
  std::mt19937_64 rng(testing::kSeed + 3);
  for (int trial = 0; trial < 10; ++trial) {
    const EgfPair pair{random_series(rng, 7, false), random_series(rng, 7, true)};
    const ProductionCheck c = check_exp_riordan_production(pair, 7);
    EXPECT_TRUE(c.report.pass) << c.report.detail;
  }
}

TEST(Riordan, LahArrayOfPaths) {
  // With only leaves and single children every increasing tree is a path.
  const PolyMatrix p = lah_production(CoeffSeq::table({Poly(1), Poly(1)}, 0, 0), 6);
  const PolyMatrix out = output_matrix(p, 5);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(out(n, 0), Poly(1));
}

TEST(Riordan, SimpleRoutes) {
  EXPECT_TRUE(check_production_route(SimpleFamily::bt, 6).pass);
  EXPECT_TRUE(check_production_route(SimpleFamily::rt, 6).pass);
  EXPECT_TRUE(check_irt_from_rt(5).pass);
}

TEST(Riordan, CsvRows) {
  RationalMatrix m = RationalMatrix::identity(2);
  m(1, 0) = mpq_class(1, 2);
  EXPECT_EQ(to_csv(m), "1,0\n1/2,1\n");
}

}  // namespace
}  // namespace tfrac
