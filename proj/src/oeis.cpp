// SPDX-License-Identifier: MIT
#include "tfrac/oeis.hpp"

#include <curl/curl.h>
#include <fmt/format.h>
#include <openssl/evp.h>
#include <tbb/parallel_for.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tfrac/continued_fraction.hpp"

#ifndef TFRAC_DEFAULT_FIXTURES
#define TFRAC_DEFAULT_FIXTURES ""
#endif

namespace tfrac {

using nlohmann::json;

std::string to_string(const ParamTuple& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

// ------------------------------------------------------------ sweep

SweepConfig SweepConfig::first() {
  SweepConfig c;
  c.values = {{{1}, {1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}};
  c.exclude_all_delta_zero = true;
  c.exclude_cd_zero = true;
  return c;
}

SweepConfig SweepConfig::second() {
  SweepConfig c;
  c.values = {{{1, 2}, {1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  c.exclude_all_delta_zero = true;
  c.exclude_ac_zero = true;
  c.exclude_bd_zero = true;
  return c;
}

bool SweepConfig::admits(const ParamTuple& p) const {
  const long a = p[4], b = p[5], c = p[6], d = p[7];
  if (exclude_all_delta_zero && a == 0 && b == 0 && c == 0 && d == 0) return false;
  if (exclude_cd_zero && c == 0 && d == 0) return false;
  if (exclude_ac_zero && a == 0 && c == 0) return false;
  if (exclude_bd_zero && b == 0 && d == 0) return false;
  return true;
}

std::vector<ParamTuple> sweep_tuples(const SweepConfig& config) {
  std::vector<ParamTuple> out;
  for (const auto& v : config.values) {
    if (v.empty()) return out;
  }
  std::array<std::size_t, 8> digit{};
  while (true) {
    ParamTuple p{};
    for (std::size_t i = 0; i < 8; ++i) p[i] = config.values[i][digit[i]];
    if (config.admits(p)) out.push_back(p);
    // Odometer with the last parameter varying fastest.
    std::size_t i = 8;
    while (i > 0) {
      --i;
      if (++digit[i] < config.values[i].size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<mpz_class> quasi_affine_terms(const ParamTuple& params, unsigned count) {
  if (count == 0) return {};
  const auto spec = quasi_affine(QuasiAffineSpec::from_tuple(std::vector<long>(params.begin(), params.end())));
  return integer_coefficients(expand_t(spec, count - 1));
}

std::vector<SweepEntry> sweep(const SweepConfig& config) {
  const auto tuples = sweep_tuples(config);
  std::vector<SweepEntry> out(tuples.size());
  tbb::parallel_for(std::size_t{0}, tuples.size(), [&](std::size_t i) {
    out[i] = SweepEntry{tuples[i], quasi_affine_terms(tuples[i], config.n_terms)};
  });
  return out;
}

// ------------------------------------------------------------ queries

std::string to_a_form(long number) { return fmt::format("A{:06d}", number); }

std::string oeis_query_url(const std::vector<mpz_class>& terms) {
  if (terms.empty()) throw InvalidQuery("empty sequence");
  std::string q;
  for (std::size_t i = 0; i < terms.size(); ++i) q += (i ? "," : "") + terms[i].get_str();
  return "http://oeis.org/search?q=" + q + "&fmt=json";
}

namespace {

std::vector<mpz_class> parse_terms(const std::string& data) {
  std::vector<mpz_class> out;
  std::stringstream in(data);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.empty()) continue;
    try {
      out.emplace_back(item, 10);
    } catch (const std::invalid_argument&) {
      throw MalformedResponse(fmt::format("bad term '{}'", item));
    }
  }
  return out;
}

bool contains_run(const std::vector<mpz_class>& haystack, const std::vector<mpz_class>& needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

}  // namespace

std::vector<OeisEntry> parse_oeis_response(const std::string& body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw MalformedResponse(fmt::format("response is not JSON: {}", e.what()));
  }
  const json* results = &doc;
  if (doc.is_object()) {
    if (!doc.contains("results")) throw MalformedResponse("response object has no \"results\"");
    results = &doc["results"];
  }
  std::vector<OeisEntry> out;
  if (results->is_null()) return out;
  if (!results->is_array()) throw MalformedResponse("\"results\" is neither an array nor null");
  for (const auto& item : *results) {
    if (!item.is_object() || !item.contains("number") || !item["number"].is_number_integer()) {
      throw MalformedResponse("result without an integer \"number\"");
    }
    OeisEntry e;
    e.number = item["number"].get<long>();
    if (item.contains("name") && item["name"].is_string()) e.name = item["name"].get<std::string>();
    if (item.contains("data") && item["data"].is_string()) e.data = parse_terms(item["data"].get<std::string>());
    out.push_back(std::move(e));
  }
  return out;
}

std::string sha256_hex(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string out;
  for (unsigned int i = 0; i < length; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

// ------------------------------------------------------------ client

OeisClientOptions OeisClientOptions::from_environment(bool offline) {
  OeisClientOptions o;
  o.offline = offline;
  if (const char* dir = std::getenv("TFRAC_OEIS_CACHE"); dir && *dir) {
    o.cache_dir = dir;
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    o.cache_dir = std::filesystem::path(home) / ".cache" / "tfrac-lab" / "oeis";
  } else {
    o.cache_dir = std::filesystem::temp_directory_path() / "tfrac-lab-oeis";
  }
  if (const char* fixtures = std::getenv("TFRAC_OEIS_FIXTURES"); fixtures && *fixtures) {
    o.fixture_file = fixtures;
  } else if (std::string_view(TFRAC_DEFAULT_FIXTURES).size() > 0) {
    o.fixture_file = TFRAC_DEFAULT_FIXTURES;
  }
  return o;
}

OeisClient::OeisClient(OeisClientOptions options) : options_(std::move(options)) {}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t append_body(char* data, std::size_t size, std::size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

void init_curl_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
}

}  // namespace

std::string OeisClient::fetch(const std::string& url) {
  init_curl_once();
  const auto now = std::chrono::steady_clock::now();
  if (live_requests_ > 0 && now - last_request_ < options_.min_interval) {
    std::this_thread::sleep_until(last_request_ + options_.min_interval);
  }
  last_request_ = std::chrono::steady_clock::now();
  ++live_requests_;

  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> handle(curl_easy_init(), &curl_easy_cleanup);
  if (!handle) throw NetworkUnavailable("curl_easy_init failed");
  std::string body;
  curl_easy_setopt(handle.get(), CURLOPT_URL, url.c_str());
  curl_easy_setopt(handle.get(), CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(handle.get(), CURLOPT_TIMEOUT, static_cast<long>(options_.timeout.count()));
  curl_easy_setopt(handle.get(), CURLOPT_USERAGENT, "tfrac-lab");
  curl_easy_setopt(handle.get(), CURLOPT_WRITEFUNCTION, &append_body);
  curl_easy_setopt(handle.get(), CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(handle.get());
  if (rc != CURLE_OK) throw NetworkUnavailable(fmt::format("{}: {}", url, curl_easy_strerror(rc)));
  long status = 0;
  curl_easy_getinfo(handle.get(), CURLINFO_RESPONSE_CODE, &status);
  if (status != 200) throw NetworkUnavailable(fmt::format("{}: HTTP status {}", url, status));
  return body;
}

std::vector<OeisEntry> OeisClient::search_fixtures(const std::vector<mpz_class>& terms) {
  if (!fixtures_) {
    const auto body = read_file(*options_.fixture_file);
    if (!body) throw NetworkUnavailable(fmt::format("cannot read fixture file {}", options_.fixture_file->string()));
    fixtures_ = parse_oeis_response(*body);
  }
  std::vector<OeisEntry> out;
  for (const auto& e : *fixtures_) {
    if (contains_run(e.data, terms)) out.push_back(e);
  }
  return out;
}

std::vector<OeisEntry> OeisClient::search(const std::vector<mpz_class>& terms) {
  const std::string url = oeis_query_url(terms);
  const auto cache_file = options_.cache_dir / (sha256_hex(url) + ".json");
  if (!options_.cache_dir.empty()) {
    if (auto cached = read_file(cache_file)) return parse_oeis_response(*cached);
  }
  if (options_.offline) {
    if (options_.fixture_file) return search_fixtures(terms);
    throw NetworkUnavailable(fmt::format("offline and no cached response for {}", url));
  }
  const std::string body = fetch(url);
  auto entries = parse_oeis_response(body);  // validate before caching
  if (!options_.cache_dir.empty()) {
    std::filesystem::create_directories(options_.cache_dir);
    const auto tmp = cache_file.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << body;
    }
    std::filesystem::rename(tmp, cache_file);
  }
  return entries;
}

std::vector<std::string> OeisClient::lookup(const std::vector<mpz_class>& terms, unsigned drop_first) {
  if (drop_first >= terms.size()) throw InvalidQuery("no terms left after dropping the leading ones");
  const std::vector<mpz_class> query(terms.begin() + drop_first, terms.end());
  std::vector<std::string> out;
  for (const auto& e : search(query)) out.push_back(to_a_form(e.number));
  return out;
}

// ------------------------------------------------------------ known matches

const std::vector<KnownMatch>& second_sweep_matches() {
  static const std::vector<KnownMatch> rows{
      {"A258173", {1, 1, 3, 12, 58, 321, 1975, 13265}, {1, 1, 0, 0, 0, 1, 2, 2}},
      {"A006318", {1, 2, 6, 22, 90, 394, 1806, 8558}, {1, 1, 0, 0, 1, 1, 0, 0}},
      {"A302285", {1, 2, 7, 33, 185, 1170, 8121}, {1, 1, 0, 0, 1, 2, 2, 2}},
      {"A047891", {1, 3, 12, 57, 300, 1686, 9912}, {1, 1, 0, 0, 2, 2, 0, 0}},
      {"A155866", {1, 2, 6, 22, 91, 413, 2032}, {1, 1, 0, 1, 1, 1, 0, 0}},
      {"A155857", {1, 2, 6, 23, 107, 590, 3786}, {1, 1, 1, 1, 1, 1, 0, 0}},
      {"A000311", {1, 1, 4, 26, 236, 2752, 39208}, {1, 2, 2, 2, 0, 1, 2, 2}},
      {"A001515", {1, 2, 7, 37, 266, 2431, 27007}, {1, 2, 2, 2, 1, 1, 0, 0}},
      {"A006351", {1, 2, 8, 52, 472, 5504, 78416}, {1, 2, 2, 2, 1, 2, 2, 2}},
      {"A043301", {1, 3, 13, 77, 591, 5627, 64261}, {1, 2, 2, 2, 2, 2, 0, 0}},
      {"A155867", {1, 3, 13, 65, 355, 2061, 12501}, {2, 1, 0, 0, 1, 1, 0, 0}},
      {"A103210", {1, 3, 15, 93, 645, 4791, 37275}, {2, 2, 0, 0, 1, 1, 0, 0}},
      {"A156017", {1, 4, 24, 176, 1440, 12608}, {2, 2, 0, 0, 2, 2, 0, 0}},
  };
  return rows;
}

const std::vector<KnownMatch>& first_sweep_matches() {
  static const std::vector<KnownMatch> rows{
      {"A187251", {1, 1, 2, 6, 22, 94, 460, 2532, 15420, 102620, 739512}, {1, 1, 0, 1, 0, 0, 1, 0}},
      {"A105072", {1, 2, 5, 16, 63, 290, 1511, 8756, 55761, 386394, 2889181}, {1, 1, 0, 1, 1, 0, 1, 0}},
      {"A230008", {1, 1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255, 18868575}, {1, 1, 1, 1, 0, 1, 0, 1}},
  };
  return rows;
}

CheckReport reproduce_table(const std::vector<KnownMatch>& rows, const SweepConfig& config, OeisClient& client) {
  CheckReport report;
  const auto tuples = sweep_tuples(config);
  for (const auto& row : rows) {
    if (std::find(tuples.begin(), tuples.end(), row.params) == tuples.end()) {
      report.fail(fmt::format("{}: tuple {} is not in the sweep", row.a_number, to_string(row.params)));
      continue;
    }
    const auto count = static_cast<unsigned>(std::max<std::size_t>(row.first_terms.size(), config.n_terms));
    const auto terms = quasi_affine_terms(row.params, count);
    for (std::size_t i = 0; i < row.first_terms.size(); ++i) {
      if (terms[i] != row.first_terms[i]) {
        report.fail(fmt::format("{}: term {} is {}, expected {}", row.a_number, i, terms[i].get_str(),
                                row.first_terms[i]));
        break;
      }
    }
    const std::vector<mpz_class> query(terms.begin(), terms.begin() + config.n_terms);
    const auto found = client.lookup(query, config.drop_first);
    if (std::find(found.begin(), found.end(), row.a_number) == found.end()) {
      report.fail(fmt::format("{}: lookup of {} did not return it", row.a_number, to_string(row.params)));
    }
  }
  if (report.pass) report.detail = fmt::format("{} rows reproduced", rows.size());
  return report;
}

std::vector<SweepMatch> sweep_matches(const SweepConfig& config, OeisClient& client) {
  std::vector<SweepMatch> out;
  for (auto& entry : sweep(config)) {
    auto found = client.lookup(entry.terms, config.drop_first);
    if (!found.empty()) out.push_back({entry.params, std::move(entry.terms), std::move(found)});
  }
  return out;
}

}  // namespace tfrac
