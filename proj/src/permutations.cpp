// SPDX-License-Identifier: MIT
#include "tfrac/permutations.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "tfrac/continued_fraction.hpp"

namespace tfrac {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)), inverse_(word_.size(), 0) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const int l = word_[static_cast<std::size_t>(i)];
    if (l < 1 || l > n || inverse_[static_cast<std::size_t>(l - 1)] != 0) {
      throw std::invalid_argument(fmt::format("not a permutation: {}", fmt::join(word_, " ")));
    }
    inverse_[static_cast<std::size_t>(l - 1)] = i + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  if (size() <= 9) return fmt::format("{}", fmt::join(word_, ""));
  return fmt::format("{}", fmt::join(word_, " "));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  const bool spaced = text.find_first_of(" ,") != std::string_view::npos;
  int value = -1;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (spaced) {
        value = (value < 0 ? 0 : value * 10) + (ch - '0');
      } else {
        word.push_back(ch - '0');
      }
    } else if (ch == ' ' || ch == ',') {
      if (value >= 0) word.push_back(value);
      value = -1;
    } else {
      throw std::invalid_argument(fmt::format("bad permutation text '{}'", text));
    }
  }
  if (value >= 0) word.push_back(value);
  return Permutation(std::move(word));
}

std::string_view to_string(LinearClass c) {
  switch (c) {
    case LinearClass::peak:
      return "peak";
    case LinearClass::valley:
      return "valley";
    case LinearClass::double_ascent:
      return "dasc";
    case LinearClass::double_descent:
      return "ddes";
  }
  return "?";
}

LinearClass linear_class(const Permutation& sigma, int i) {
  const int before = sigma.at(i - 1);
  const int here = sigma.at(i);
  const int after = sigma.at(i + 1);
  if (before < here) return here > after ? LinearClass::peak : LinearClass::double_ascent;
  return here < after ? LinearClass::valley : LinearClass::double_descent;
}

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::p31_2:
      return "31-2";
    case Pattern::p2_13:
      return "2-13";
    case Pattern::p2_31:
      return "2-31";
    case Pattern::p13_2:
      return "13-2";
  }
  return "?";
}

Pattern parse_pattern(std::string_view name) {
  for (Pattern p : {Pattern::p31_2, Pattern::p2_13, Pattern::p2_31, Pattern::p13_2}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument(fmt::format("unknown pattern '{}' (31-2|2-13|2-31|13-2)", name));
}

int pattern_count(const Permutation& sigma, int letter, Pattern p) {
  const int n = sigma.size();
  const int pos = sigma.position(letter);
  int count = 0;
  // Adjacent pair (j, j+1) strictly on the required side of the letter.
  for (int j = 1; j < n; ++j) {
    const int lo = sigma.at(j);
    const int hi = sigma.at(j + 1);
    const bool left = j + 1 < pos;
    const bool right = j > pos;
    switch (p) {
      case Pattern::p31_2:
        count += left && hi < letter && letter < lo;
        break;
      case Pattern::p13_2:
        count += left && lo < letter && letter < hi;
        break;
      case Pattern::p2_13:
        count += right && lo < letter && letter < hi;
        break;
      case Pattern::p2_31:
        count += right && hi < letter && letter < lo;
        break;
    }
  }
  return count;
}

PatternTotals pattern_totals(const Permutation& sigma) {
  PatternTotals totals;
  const int n = sigma.size();
  auto& t = totals.by_pattern;
  for (int j = 1; j < n; ++j) {
    const int first = sigma.at(j);
    const int second = sigma.at(j + 1);
    const bool ascent = first < second;
    const int lo = std::min(first, second);
    const int hi = std::max(first, second);
    for (int i = 1; i <= n; ++i) {
      if (i == j || i == j + 1) continue;
      const int l = sigma.at(i);
      if (l <= lo || l >= hi) continue;
      if (i > j + 1) {
        ++t[static_cast<int>(ascent ? Pattern::p13_2 : Pattern::p31_2)];
      } else {
        ++t[static_cast<int>(ascent ? Pattern::p2_13 : Pattern::p2_31)];
      }
    }
  }
  return totals;
}

namespace {

using Histogram = std::unordered_map<std::uint32_t, std::uint64_t>;

std::uint32_t pack(const PatternTotals& t) {
  std::uint32_t key = 0;
  for (int k = 0; k < 4; ++k) key |= static_cast<std::uint32_t>(t.by_pattern[k]) << (8 * k);
  return key;
}

int unpack(std::uint32_t key, Pattern p) { return static_cast<int>((key >> (8 * static_cast<int>(p))) & 0xFF); }

Histogram pattern_histogram(int n) {
  if (n > 16) throw std::invalid_argument("pattern histograms are limited to n <= 16");
  return reduce_permutations(
      n, Histogram{}, [](Histogram& h, const Permutation& s) { ++h[pack(pattern_totals(s))]; },
      [](Histogram a, const Histogram& b) {
        for (const auto& [k, c] : b) a[k] += c;
        return a;
      });
}

Poly symbol_power(std::string_view base, unsigned e) { return e == 0 ? Poly(1) : Poly::symbol(base).pow(e); }

// Symbols in the order (p, q, r, s) of the variable slots.
const std::array<IndexedSymbol, 4>& pqrs() {
  static const std::array<IndexedSymbol, 4> s{IndexedSymbol("p"), IndexedSymbol("q"), IndexedSymbol("r"),
                                               IndexedSymbol("s")};
  return s;
}

/// P(v0, v1, v2, v3) where each argument is a variable index 0..3 or -1 for 1.
Poly substitute(const Poly& poly, const std::array<int, 4>& args) {
  Substitution sub;
  for (int k = 0; k < 4; ++k) sub[pqrs()[k]] = args[k] < 0 ? Poly(1) : Poly::symbol(pqrs()[args[k]]);
  return specialize(poly, sub);
}

std::string args_str(const std::array<int, 4>& args) {
  std::string out = "P(";
  for (int k = 0; k < 4; ++k) {
    if (k) out += ',';
    out += args[k] < 0 ? std::string("1") : std::string(pqrs()[args[k]].base());
  }
  return out + ")";
}

}  // namespace

Poly p4(int n) {
  PolyAccumulator acc;
  for (const auto& [key, count] : pattern_histogram(n)) {
    Poly term = symbol_power("p", unpack(key, Pattern::p13_2)) * symbol_power("q", unpack(key, Pattern::p31_2)) *
                symbol_power("r", unpack(key, Pattern::p2_13)) * symbol_power("s", unpack(key, Pattern::p2_31));
    acc.add(term * mpz_class(static_cast<unsigned long>(count)));
  }
  return acc.to_poly();
}

CheckReport check_z2z2_symmetry(const Poly& poly, bool check_stabilizer) {
  CheckReport report;
  const std::array<std::array<int, 4>, 3> generators{{{1, 0, 3, 2}, {3, 2, 1, 0}, {2, 3, 0, 1}}};
  for (const auto& g : generators) {
    if (substitute(poly, g) != poly) report.fail(fmt::format("P(p,q,r,s) != {}", args_str(g)));
  }
  if (report.pass) report.detail = "Z2 x Z2 generators fix P";
  if (check_stabilizer) {
    std::array<int, 4> perm{0, 1, 2, 3};
    int fixing = 0;
    do {
      if (substitute(poly, perm) == poly) {
        ++fixing;
        const bool in_group = perm == std::array<int, 4>{0, 1, 2, 3} ||
                              std::find(generators.begin(), generators.end(), perm) != generators.end();
        if (!in_group) report.fail(fmt::format("extra symmetry {}", args_str(perm)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (report.pass) report.detail += fmt::format("; stabilizer has exactly {} elements", fixing);
  }
  return report;
}

CheckReport check_z2z2_symmetry(int n, bool check_stabilizer) {
  auto report = check_z2z2_symmetry(p4(n), check_stabilizer);
  report.detail = fmt::format("n={}: {}", n, report.detail);
  return report;
}

CheckReport check_trivariate_conjecture(const Poly& poly) {
  CheckReport report;
  const std::array<std::pair<std::array<int, 4>, std::array<int, 4>>, 4> relations{{
      {{-1, 1, 2, 3}, {-1, 1, 3, 2}},
      {{0, -1, 2, 3}, {0, -1, 3, 2}},
      {{0, 1, -1, 3}, {1, 0, -1, 3}},
      {{0, 1, 2, -1}, {1, 0, 2, -1}},
  }};
  for (const auto& [lhs, rhs] : relations) {
    if (substitute(poly, lhs) != substitute(poly, rhs)) {
      report.fail(fmt::format("{} != {}", args_str(lhs), args_str(rhs)));
    }
  }
  if (report.pass) report.detail = "all four relations hold";
  return report;
}

CheckReport check_trivariate_conjecture(int n) {
  auto report = check_trivariate_conjecture(p4(n));
  report.detail = fmt::format("n={}: {}", n, report.detail);
  return report;
}

CheckReport check_pair_equidistribution(int n) {
  const Poly poly = p4(n);
  CheckReport report;
  // (2-13, 31-2) in (r, q) against (2-31, 31-2) in (s, q), both renamed to (r, q).
  if (substitute(poly, {-1, 1, 2, -1}) != substitute(poly, {-1, 1, -1, 2})) {
    report.fail(fmt::format("n={}: joint distributions differ", n));
  } else {
    report.detail = fmt::format("n={}: equidistributed", n);
  }
  return report;
}

CheckReport claesson_equidistribution_check(int n) {
  const Poly poly = p4(n);
  CheckReport report;
  const Poly first = substitute(poly, {0, -1, -1, -1});
  for (const auto& args : {std::array<int, 4>{-1, 0, -1, -1}, {-1, -1, 0, -1}, {-1, -1, -1, 0}}) {
    if (substitute(poly, args) != first) report.fail(fmt::format("n={}: {} differs", n, args_str(args)));
  }
  if (report.pass) report.detail = fmt::format("n={}: four totals equidistributed", n);
  return report;
}

Poly pq_integer(unsigned k) {
  Poly out;
  for (unsigned i = 0; i < k; ++i) out += symbol_power("p", i) * symbol_power("q", k - 1 - i);
  return out;
}

CheckReport pq_sfraction_check(int n_max) {
  const auto alpha = CoeffSeq::rule([](unsigned i) { return pq_integer((i + 1) / 2); }, "[k]_{p,q}");
  const Series fraction = expand_s(SFractionSpec{alpha}, static_cast<unsigned>(n_max));
  CheckReport report;
  for (int n = 0; n <= n_max; ++n) {
    // 2-13 counts in p, 31-2 counts in q.
    const Poly lhs = substitute(p4(n), {-1, 1, 0, -1});
    if (lhs != fraction[static_cast<unsigned>(n)]) {
      report.fail(fmt::format("n={}: {} != {}", n, lhs.str(), fraction[static_cast<unsigned>(n)].str()));
    }
  }
  if (report.pass) report.detail = fmt::format("n<={}: S-fraction matches", n_max);
  return report;
}

}  // namespace tfrac
