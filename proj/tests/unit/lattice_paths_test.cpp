// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "test_support.hpp"
#include "tfrac/lattice_paths.hpp"

namespace tfrac {
namespace {

/// A free symbol per (step, height, label) so that sums compare symbolically.
Poly generic_weight(Step s, int height, const Label& l) {
  static constexpr std::array<std::string_view, 3> kBase{"U", "D", "L"};
  return Poly::symbol(kBase[static_cast<std::size_t>(s)], static_cast<unsigned>(height),
                      static_cast<unsigned>(l.kind * 100 + l.value));
}

TEST(Paths, CountsByKind) {
  const std::vector<std::size_t> motzkin{1, 1, 2, 4, 9, 21, 51};
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42};
  const std::vector<std::size_t> schroder{1, 2, 6, 22, 90, 394};
  for (int n = 0; n < 7; ++n) EXPECT_EQ(enumerate_paths(PathKind::motzkin, n).size(), motzkin[n]);
  for (int n = 0; n < 6; ++n) {
    EXPECT_EQ(enumerate_paths(PathKind::dyck, 2 * n).size(), catalan[n]);
    EXPECT_EQ(enumerate_paths(PathKind::schroder, 2 * n).size(), schroder[n]);
  }
}

TEST(Paths, WordRoundtripAndValidation) {
  for (const Path& p : enumerate_paths(PathKind::schroder, 8)) {
    validate(p);
    ASSERT_EQ(Path::parse(PathKind::schroder, p.str()), p);
    ASSERT_EQ(p.length(), 8);
    ASSERT_EQ(p.heights().back(), 0);
  }
  EXPECT_THROW(validate(Path::parse(PathKind::motzkin, "DU")), InvalidPath);
  EXPECT_THROW(validate(Path::parse(PathKind::dyck, "ULD")), InvalidPath);
  EXPECT_THROW(validate(Path::parse(PathKind::motzkin, "UU")), InvalidPath);
}

TEST(Paths, TransferMatchesBruteForce) {
  const StepWeights w = generic_weight;
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(flajolet_sum(PathKind::motzkin, n, w, LabelSets::restricted_ternary()),
              flajolet_sum_bruteforce(PathKind::motzkin, n, w, LabelSets::restricted_ternary()));
  }
  for (int n = 0; n <= 6; n += 2) {
    EXPECT_EQ(flajolet_sum(PathKind::schroder, n, w, LabelSets::interval_ternary()),
              flajolet_sum_bruteforce(PathKind::schroder, n, w, LabelSets::interval_ternary()));
    EXPECT_EQ(flajolet_sum(PathKind::dyck, n, w, LabelSets::unit()),
              flajolet_sum_bruteforce(PathKind::dyck, n, w, LabelSets::unit()));
  }
}

TEST(Paths, FlajoletFractionsMatchPathSums) {
  const StepWeights w = generic_weight;
  const Series j = expand_j(motzkin_fraction(w, LabelSets::unit()), 5);
  const Series s = expand_s(dyck_fraction(w, LabelSets::unit()), 3);
  const Series t = expand_t(schroder_fraction(w, LabelSets::unit()), 3);
  for (unsigned n = 0; n <= 5; ++n) {
    EXPECT_EQ(j[n], flajolet_sum(PathKind::motzkin, static_cast<int>(n), w, LabelSets::unit()));
  }
  for (unsigned n = 0; n <= 3; ++n) {
    EXPECT_EQ(s[n], flajolet_sum(PathKind::dyck, static_cast<int>(2 * n), w, LabelSets::unit()));
    EXPECT_EQ(t[n], flajolet_sum(PathKind::schroder, static_cast<int>(2 * n), w, LabelSets::unit()));
  }
}

TEST(Paths, SchroderWeightsRealizeTheFraction) {
  const TFractionSpec spec{CoeffSeq::rule([](unsigned i) { return Poly::symbol("al", i); }),
                           CoeffSeq::rule([](unsigned i) { return Poly::symbol("de", i); })};
  const Series t = expand_t(spec, 4);
  for (unsigned n = 0; n <= 4; ++n) {
    const int length = static_cast<int>(2 * n);
    EXPECT_EQ(flajolet_sum(PathKind::schroder, length, schroder_weights(spec), LabelSets::unit()), t[n]);
    EXPECT_EQ(flajolet_sum(PathKind::schroder, length, schroder_weights_alternative(spec), LabelSets::unit()), t[n]);
  }
}

TEST(Paths, LabelsOutsideTheirSetsAreRejected) {
  const LabeledPath lp{Path::parse(PathKind::motzkin, "UD"), {Label{0, 0}, Label{0, 2}}};
  EXPECT_THROW(validate(lp, LabelSets::restricted_ternary()), InvalidPath);
  const LabeledPath ok{Path::parse(PathKind::motzkin, "UD"), {Label{0, 0}, Label{0, 1}}};
  EXPECT_NO_THROW(validate(ok, LabelSets::restricted_ternary()));
}

TEST(Paths, RenderDrawsEveryStep) {
  const std::string picture = render(Path::parse(PathKind::schroder, "ULD"));
  EXPECT_NE(picture.find('/'), std::string::npos);
  EXPECT_NE(picture.find("__"), std::string::npos);
  EXPECT_NE(picture.find('\\'), std::string::npos);
}

}  // namespace
}  // namespace tfrac
