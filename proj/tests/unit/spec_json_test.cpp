// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"
#include "tfrac/spec_json.hpp"

namespace tfrac {
namespace {

TEST(SpecJson, CoefficientForms) {
  const CoeffSeq table = parse_coeff_seq("[1, \"x+1\", 3]");
  EXPECT_EQ(table(1), Poly(1));
  EXPECT_EQ(table(2), Poly::parse("x + 1"));
  EXPECT_EQ(table(4), Poly());
  EXPECT_EQ(parse_coeff_seq("\"i^2\"")(5), Poly(25));
  const CoeffSeq paired = parse_coeff_seq(R"({"odd": "k*y", "even": "k*x"})");
  EXPECT_EQ(paired(3), Poly::parse("2*y"));
  EXPECT_EQ(paired(4), Poly::parse("2*x"));
}

TEST(SpecJson, FractionsExpandAsExpected) {
  const TFractionSpec qa = parse_tfraction("quasiaffine:1,1,1,1,1,1,1,1");
  EXPECT_EQ(expand_t(qa, 5)[5], Poly(800));
  const JFractionSpec motzkin = parse_jfraction(R"({"gamma": "1", "beta": "1"})");
  EXPECT_EQ(expand_j(motzkin, 6)[6], Poly(51));
  const SFractionSpec catalan = parse_sfraction(R"({"alpha": [1,1,1,1,1,1]})");
  EXPECT_EQ(expand_s(catalan, 5)[5], Poly(42));
  const TFractionSpec explicit_t = parse_tfraction(R"({"alpha": "1", "delta": [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]})");
  EXPECT_EQ(expand_t(explicit_t, 5), expand_t(quasi_affine(QuasiAffineSpec::from_tuple({1, 1, 0, 0, 1, 1, 0, 0})), 5));
}

TEST(SpecJson, Substitution) {
  const Substitution s = parse_substitution(R"j({"x1": 2, "a(0,1)": "p*q"})j");
  EXPECT_EQ(s.at(IndexedSymbol("x1")), Poly(2));
  EXPECT_EQ(s.at(IndexedSymbol("a", 0, 1)), Poly::parse("p*q"));
}

TEST(SpecJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_coeff_seq("{"), SpecParseError);
  EXPECT_THROW(parse_coeff_seq("true"), SpecParseError);
  EXPECT_THROW(parse_tfraction("quasiaffine:1,2"), SpecParseError);
  EXPECT_THROW(parse_jfraction(R"({"gamma": "1"})"), SpecParseError);
  EXPECT_THROW(parse_substitution("[1]"), SpecParseError);
}

}  // namespace
}  // namespace tfrac
