// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "test_support.hpp"
#include "tfrac/continued_fraction.hpp"

namespace tfrac {
namespace {

std::vector<long> integers(const Series& s) {
  std::vector<long> out;
  for (const auto& v : integer_coefficients(s)) out.push_back(v.get_si());
  return out;
}

CoeffSeq random_table(std::mt19937_64& rng, unsigned length) {
  std::uniform_int_distribution<long> draw(-9, 9);
  std::vector<Poly> values;
  for (unsigned i = 0; i < length; ++i) values.emplace_back(draw(rng));
  return CoeffSeq::table(std::move(values));
}

TEST(Fractions, UnitSFractionGivesCatalanNumbers) {
  const SFractionSpec s{CoeffSeq::constant(1)};
  EXPECT_EQ(integers(expand_s(s, 7)), (std::vector<long>{1, 1, 2, 5, 14, 42, 132, 429}));
}

TEST(Fractions, UnitJFractionGivesMotzkinNumbers) {
  const JFractionSpec j{CoeffSeq::constant(1), CoeffSeq::constant(1)};
  EXPECT_EQ(integers(expand_j(j, 7)), (std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127}));
}

TEST(Fractions, FactorialSFraction) {
  // alpha_{2k-1} = alpha_{2k} = k gives n!.
  const SFractionSpec s{CoeffSeq::rule([](unsigned i) { return Poly(static_cast<long>((i + 1) / 2)); })};
  EXPECT_EQ(integers(expand_s(s, 7)), (std::vector<long>{1, 1, 2, 6, 24, 120, 720, 5040}));
}

TEST(Fractions, DepthNIsExact) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const TFractionSpec t{random_table(rng, 12), random_table(rng, 12)};
    EXPECT_EQ(expand_t(t, 6, 6), expand_t(t, 6, 11));
  }
}

TEST(Fractions, QuasiAffineAllOnes) {
  const auto t = quasi_affine(QuasiAffineSpec::from_tuple({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(integers(expand_t(t, 7)), (std::vector<long>{1, 2, 6, 24, 124, 800, 6208, 56240}));
  EXPECT_THROW(QuasiAffineSpec::from_tuple({1, 2, 3}), std::invalid_argument);
}

TEST(Fractions, OddContractionOnRandomSpecs) {
  std::mt19937_64 rng(testing::kSeed + 1);
  std::uniform_int_distribution<long> draw(-9, 9);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> delta;
    for (unsigned i = 1; i <= 12; ++i) delta.emplace_back(i % 2 == 1 ? 0 : draw(rng));
    const TFractionSpec t{random_table(rng, 12), CoeffSeq::table(delta)};
    const OddContraction c = odd_contract(t, 12);
    const Series rhs = Series::one(6) + expand_j(c.j, 6).shifted().scaled(c.alpha1);
    EXPECT_EQ(expand_t(t, 6), rhs);
  }
}

TEST(Fractions, OddContractionRejectsOddDelta) {
  const TFractionSpec t{CoeffSeq::constant(1), CoeffSeq::constant(1)};
  EXPECT_THROW(odd_contract(t, 4), OddDeltaNonzero);
}

TEST(Fractions, TransformationOnRandomSpecs) {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 25; ++trial) {
    const CoeffSeq alpha = random_table(rng, 12);
    const CoeffSeq even = random_table(rng, 12);
    const CoeffSeq odd = random_table(rng, 12);
    EXPECT_EQ(transformed_expansion(alpha, even, odd, 6), expand_t(insert_odd_delta(alpha, even, odd), 6));
  }
}

TEST(Fractions, SeriesToJFractionRecoversCoefficients) {
  std::mt19937_64 rng(testing::kSeed + 3);
  std::uniform_int_distribution<long> gamma(-5, 5);
  std::uniform_int_distribution<long> beta(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> g;
    std::vector<Poly> b;
    for (int i = 0; i < 6; ++i) {
      g.emplace_back(gamma(rng));
      b.emplace_back(beta(rng));
    }
    const JFractionSpec j{CoeffSeq::table(g, 0, 0), CoeffSeq::table(b)};
    const RationalJFraction r = series_to_jfraction(expand_j(j, 10), 4);
    ASSERT_GE(r.gamma.size(), 4U);
    ASSERT_GE(r.beta.size(), 4U);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(r.gamma[i], g[i].to_integer());
      EXPECT_EQ(r.beta[i], b[i].to_integer());
    }
  }
}

TEST(Fractions, SeriesCoefficientsReduceToPlainFraction) {
  const auto alpha = [](unsigned i, unsigned order) { return Series::constant(order, static_cast<long>(i)); };
  const auto delta = [](unsigned, unsigned order) { return Series::constant(order, 1); };
  const TFractionSpec plain{CoeffSeq::rule([](unsigned i) { return Poly(static_cast<long>(i)); }),
                            CoeffSeq::constant(1)};
  EXPECT_EQ(expand_t_series(alpha, delta, 6), expand_t(plain, 6));
}

}  // namespace
}  // namespace tfrac
