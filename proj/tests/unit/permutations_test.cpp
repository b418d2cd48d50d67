// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "test_support.hpp"
#include "tfrac/permutations.hpp"

namespace tfrac {
namespace {

/// Direct reading of the four vincular patterns with `letter` as the "2".
int naive_count(const Permutation& s, int letter, Pattern p) {
  const int j = s.position(letter);
  int count = 0;
  for (int i = 1; i < s.size(); ++i) {
    const int lo = s.at(i);
    const int hi = s.at(i + 1);
    switch (p) {
      case Pattern::p31_2: count += (i + 1 < j && lo > letter && letter > hi) ? 1 : 0; break;
      case Pattern::p13_2: count += (i + 1 < j && lo < letter && letter < hi) ? 1 : 0; break;
      case Pattern::p2_13: count += (j < i && lo < letter && letter < hi) ? 1 : 0; break;
      case Pattern::p2_31: count += (j < i && lo > letter && letter > hi) ? 1 : 0; break;
    }
  }
  return count;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

TEST(Permutations, ParseAndValidate) {
  EXPECT_EQ(Permutation::parse("57316284").str(), "57316284");
  EXPECT_THROW(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST(Permutations, PatternCountsMatchDefinition) {
  for (const Permutation& s : all_permutations(6)) {
    PatternTotals expected;
    for (Pattern p : {Pattern::p31_2, Pattern::p2_13, Pattern::p2_31, Pattern::p13_2}) {
      for (int letter = 1; letter <= 6; ++letter) {
        const int c = naive_count(s, letter, p);
        ASSERT_EQ(pattern_count(s, letter, p), c) << s.str() << " " << to_string(p) << " letter " << letter;
        expected.by_pattern[static_cast<std::size_t>(p)] += c;
      }
    }
    ASSERT_EQ(pattern_totals(s).by_pattern, expected.by_pattern);
  }
}

TEST(Permutations, LinearClassesUseZeroBoundary) {
  const Permutation s = Permutation::parse("2413");
  EXPECT_EQ(linear_class(s, 1), LinearClass::double_ascent);
  EXPECT_EQ(linear_class(s, 2), LinearClass::peak);
  EXPECT_EQ(linear_class(s, 3), LinearClass::valley);
  EXPECT_EQ(linear_class(s, 4), LinearClass::peak);
  EXPECT_EQ(linear_class(Permutation::parse("321"), 2), LinearClass::double_descent);
}

TEST(Permutations, FourVariablePolynomialCountsPermutations) {
  long factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= n;
    const Poly ones = specialize(p4(n), [](const IndexedSymbol&) { return std::optional<Poly>(1); });
    EXPECT_EQ(ones, Poly(factorial));
  }
}

TEST(Permutations, SymmetryAndConjectureAtSmallSizes) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(check_z2z2_symmetry(n, n >= 5).pass) << n;
    EXPECT_TRUE(check_trivariate_conjecture(n).pass) << n;
    EXPECT_TRUE(check_pair_equidistribution(n).pass) << n;
    EXPECT_TRUE(claesson_equidistribution_check(n).pass) << n;
  }
  EXPECT_TRUE(pq_sfraction_check(6).pass);
}

TEST(Permutations, SymmetryCheckDetectsABrokenPolynomial) {
  EXPECT_FALSE(check_z2z2_symmetry(p4(5) + Poly::symbol("p"), false).pass);
  EXPECT_FALSE(check_trivariate_conjecture(p4(5) + Poly::symbol("p")).pass);
}

TEST(Permutations, PqIntegers) {
  EXPECT_EQ(pq_integer(1), Poly(1));
  EXPECT_EQ(pq_integer(3), Poly::parse("p^2 + p*q + q^2"));
}

TEST(Permutations, ParallelReductionVisitsEveryPermutationOnce) {
  const auto total = reduce_permutations(
      7, 0L, [](long& acc, const Permutation&) { ++acc; }, [](long a, long b) { return a + b; });
  EXPECT_EQ(total, 5040);
}

}  // namespace
}  // namespace tfrac
