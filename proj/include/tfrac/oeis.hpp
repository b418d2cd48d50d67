// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <array>
#include <chrono>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfrac/report.hpp"

namespace tfrac {

class NetworkUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedResponse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quasi-affine parameters in the order (x, y, u, v, a, b, c, d).
using ParamTuple = std::array<long, 8>;

std::string to_string(const ParamTuple& params);

/// Which parameter tuples a sweep visits and how many terms it generates.
struct SweepConfig {
  std::array<std::vector<long>, 8> values;
  bool exclude_all_delta_zero = true;  // a = b = c = d = 0
  bool exclude_cd_zero = false;        // c = d = 0
  bool exclude_ac_zero = false;        // a = c = 0
  bool exclude_bd_zero = false;        // b = d = 0
  unsigned n_terms = 10;
  /// Leading terms dropped before a lookup.
  unsigned drop_first = 1;

  /// x = y = 1, other parameters in {0,1}; drops a=b=c=d=0 and c=d=0.
  static SweepConfig first();
  /// x, y in {1,2}, other parameters in {0,1,2}; drops a=c=0 and b=d=0.
  static SweepConfig second();

  [[nodiscard]] bool admits(const ParamTuple& params) const;
};

struct SweepEntry {
  ParamTuple params{};
  std::vector<mpz_class> terms;  // a_0 .. a_{n_terms-1}
};

/// One sequence per admitted tuple, in lexicographic tuple order.
std::vector<SweepEntry> sweep(const SweepConfig& config);
/// The admitted tuples alone.
std::vector<ParamTuple> sweep_tuples(const SweepConfig& config);
/// First `count` terms of the quasi-affine T-fraction for the tuple.
std::vector<mpz_class> quasi_affine_terms(const ParamTuple& params, unsigned count);

/// "A" followed by the number zero-padded to six digits.
std::string to_a_form(long number);

/// The search URL for a list of terms, as the OEIS JSON interface expects.
std::string oeis_query_url(const std::vector<mpz_class>& terms);

struct OeisEntry {
  long number = 0;
  std::string name;
  std::vector<mpz_class> data;
};

/// Parses an OEIS search response: either a bare array of entries or an
/// object with a "results" member; null means no results.
std::vector<OeisEntry> parse_oeis_response(const std::string& body);

struct OeisClientOptions {
  /// Raw responses, one file per SHA-256 of the query URL.
  std::filesystem::path cache_dir;
  /// Local stand-in for the database, consulted in offline mode.
  std::optional<std::filesystem::path> fixture_file;
  bool offline = true;
  std::chrono::milliseconds min_interval{1000};
  std::chrono::seconds timeout{30};

  /// Cache from $TFRAC_OEIS_CACHE (else ~/.cache/tfrac-lab/oeis), fixtures
  /// from $TFRAC_OEIS_FIXTURES (else the bundled file).
  static OeisClientOptions from_environment(bool offline);
};

/// Looks sequences up on the OEIS with a disk cache and rate limiting.
///
/// The cache is consulted first in every mode. Offline, a cache miss is
/// answered from the fixture file (contiguous-subsequence search, as the live
/// site does), or raises NetworkUnavailable when there is none.
class OeisClient {
 public:
  explicit OeisClient(OeisClientOptions options);

  /// A-numbers matching the terms after dropping the first `drop_first`.
  std::vector<std::string> lookup(const std::vector<mpz_class>& terms, unsigned drop_first = 1);
  std::vector<OeisEntry> search(const std::vector<mpz_class>& terms);

  [[nodiscard]] const OeisClientOptions& options() const noexcept { return options_; }
  [[nodiscard]] unsigned live_requests() const noexcept { return live_requests_; }

 private:
  std::string fetch(const std::string& url);
  std::vector<OeisEntry> search_fixtures(const std::vector<mpz_class>& terms);

  OeisClientOptions options_;
  std::optional<std::vector<OeisEntry>> fixtures_;
  std::chrono::steady_clock::time_point last_request_{};
  unsigned live_requests_ = 0;
};

/// Hex SHA-256 of the text; names cache files.
std::string sha256_hex(const std::string& text);

/// A row of the table of OEIS matches for quasi-affine T-fractions.
struct KnownMatch {
  std::string a_number;
  std::vector<long> first_terms;
  ParamTuple params{};
};

/// The thirteen matches of the {0,1,2} sweep.
const std::vector<KnownMatch>& second_sweep_matches();
/// The three matches of the {0,1} sweep.
const std::vector<KnownMatch>& first_sweep_matches();

/// Every row: the sweep contains the tuple, its leading terms equal the
/// listed ones, and the lookup returns the A-number.
CheckReport reproduce_table(const std::vector<KnownMatch>& rows, const SweepConfig& config, OeisClient& client);

struct SweepMatch {
  ParamTuple params{};
  std::vector<mpz_class> terms;
  std::vector<std::string> a_numbers;
};

/// Looks up every sweep sequence and keeps those with at least one match.
std::vector<SweepMatch> sweep_matches(const SweepConfig& config, OeisClient& client);

}  // namespace tfrac
