// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "tfrac/oeis.hpp"

namespace tfrac {
namespace {

std::vector<mpz_class> terms(std::initializer_list<long> values) {
  std::vector<mpz_class> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

/// A fresh directory removed when the test ends.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag)
      : path_(std::filesystem::temp_directory_path() / ("tfrac-" + tag + "-" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() { std::filesystem::remove_all(path_); }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void write(const std::filesystem::path& file, const std::string& body) {
  std::ofstream out(file);
  out << body;
}

TEST(Oeis, Formatting) {
  EXPECT_EQ(to_a_form(6318), "A006318");
  EXPECT_EQ(oeis_query_url(terms({1, 2, 6})), "http://oeis.org/search?q=1,2,6&fmt=json");
  EXPECT_THROW(oeis_query_url({}), InvalidQuery);
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Oeis, ParsesBothResponseShapes) {
  const auto bare = parse_oeis_response(R"([{"number": 45, "name": "Fibonacci", "data": "0,1,1,2,3"}])");
  ASSERT_EQ(bare.size(), 1U);
  EXPECT_EQ(bare[0].number, 45);
  EXPECT_EQ(bare[0].data, terms({0, 1, 1, 2, 3}));
  EXPECT_TRUE(parse_oeis_response(R"({"results": null})").empty());
  EXPECT_THROW(parse_oeis_response("not json"), MalformedResponse);
  EXPECT_THROW(parse_oeis_response(R"({"count": 0})"), MalformedResponse);
  EXPECT_THROW(parse_oeis_response(R"([{"name": "no number"}])"), MalformedResponse);
}

TEST(Oeis, SweepSizes) {
  EXPECT_EQ(sweep_tuples(SweepConfig::first()).size(), 48U);
  EXPECT_EQ(sweep_tuples(SweepConfig::second()).size(), 2304U);
  for (const auto& t : sweep_tuples(SweepConfig::second())) {
    ASSERT_FALSE(t[4] == 0 && t[6] == 0);
    ASSERT_FALSE(t[5] == 0 && t[7] == 0);
  }
}

TEST(Oeis, QuasiAffineTerms) {
  EXPECT_EQ(quasi_affine_terms({1, 1, 1, 1, 0, 1, 0, 1}, 6), terms({1, 1, 3, 11, 51, 295}));
}

TEST(Oeis, OfflineFixtureSearchMatchesRuns) {
  ScratchDir dir("fixtures");
  const auto fixtures = dir.path() / "fixtures.json";
  write(fixtures, R"({"results": [{"number": 108, "name": "Catalan", "data": "1,1,2,5,14,42,132"}]})");
  OeisClientOptions options;
  options.cache_dir = dir.path() / "cache";
  options.fixture_file = fixtures;
  OeisClient client(options);
  EXPECT_EQ(client.lookup(terms({9, 2, 5, 14}), 1), std::vector<std::string>{"A000108"});
  EXPECT_TRUE(client.lookup(terms({1, 2, 14}), 0).empty());
  EXPECT_EQ(client.live_requests(), 0U);
  EXPECT_THROW(client.lookup(terms({1}), 1), InvalidQuery);
}

TEST(Oeis, CacheIsConsultedBeforeFixtures) {
  ScratchDir dir("cache");
  const auto query = terms({2, 5, 14});
  write(dir.path() / (sha256_hex(oeis_query_url(query)) + ".json"), R"([{"number": 7, "data": "2,5,14"}])");
  OeisClientOptions options;
  options.cache_dir = dir.path();
  options.fixture_file = dir.path() / "missing.json";
  OeisClient client(options);
  EXPECT_EQ(client.lookup(query, 0), std::vector<std::string>{"A000007"});
}

TEST(Oeis, OfflineWithoutFixturesIsUnavailable) {
  ScratchDir dir("offline");
  OeisClientOptions options;
  options.cache_dir = dir.path();
  OeisClient client(options);
  EXPECT_THROW(client.lookup(terms({1, 2, 3}), 0), NetworkUnavailable);
  options.fixture_file = dir.path() / "missing.json";
  OeisClient unreadable(options);
  EXPECT_THROW(unreadable.lookup(terms({1, 2, 3}), 0), NetworkUnavailable);
}

TEST(Oeis, BundledFixturesReproduceBothTables) {
  ScratchDir dir("tables");
  OeisClientOptions options;
  options.cache_dir = dir.path();
  options.fixture_file = std::filesystem::path(TFRAC_SOURCE_DIR) / "data/oeis/fixtures.json";
  OeisClient client(options);
  const CheckReport second = reproduce_table(second_sweep_matches(), SweepConfig::second(), client);
  EXPECT_TRUE(second.pass) << second.detail;
  const CheckReport first = reproduce_table(first_sweep_matches(), SweepConfig::first(), client);
  EXPECT_TRUE(first.pass) << first.detail;
}

}  // namespace
}  // namespace tfrac
