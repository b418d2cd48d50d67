// SPDX-License-Identifier: MIT
#pragma once

#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tfrac/report.hpp"
#include "tfrac/symbolic.hpp"

namespace tfrac {

/// A permutation of [n] in one-line notation; positions and letters are 1-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a permutation of 1..n.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(word_.size()); }
  /// sigma_i for 1 <= i <= n, and 0 at the boundary positions 0 and n+1.
  [[nodiscard]] int at(int i) const noexcept {
    return (i < 1 || i > size()) ? 0 : word_[static_cast<std::size_t>(i - 1)];
  }
  /// Position of letter l.
  [[nodiscard]] int position(int letter) const { return inverse_.at(static_cast<std::size_t>(letter - 1)); }
  [[nodiscard]] const std::vector<int>& word() const noexcept { return word_; }
  /// Concatenated digits for n <= 9, space-separated otherwise.
  [[nodiscard]] std::string str() const;
  static Permutation parse(std::string_view text);

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

enum class LinearClass : std::uint8_t { peak, valley, double_ascent, double_descent };

std::string_view to_string(LinearClass c);

/// Classification of position i under the boundary sigma_0 = sigma_{n+1} = 0.
LinearClass linear_class(const Permutation& sigma, int position);

/// Vincular patterns with the distinguished letter playing the role of "2".
enum class Pattern : std::uint8_t { p31_2, p2_13, p2_31, p13_2 };

std::string_view to_string(Pattern p);
Pattern parse_pattern(std::string_view name);

/// Occurrences of the pattern in which `letter` is the "2".
int pattern_count(const Permutation& sigma, int letter, Pattern p);

/// Totals over all letters, indexed by Pattern.
struct PatternTotals {
  std::array<int, 4> by_pattern{};
  [[nodiscard]] int operator[](Pattern p) const { return by_pattern[static_cast<int>(p)]; }
};
PatternTotals pattern_totals(const Permutation& sigma);

/// Deterministic parallel reduction over all permutations of [n], split by
/// first letter. Within a block, permutations arrive in lexicographic order.
template <class Acc, class Visit, class Combine>
Acc reduce_permutations(int n, Acc identity, Visit visit, Combine combine) {
  if (n <= 1) {
    Acc acc = identity;
    visit(acc, Permutation::identity(n));
    return acc;
  }
  return tbb::parallel_reduce(
      tbb::blocked_range<int>(1, n + 1, 1), identity,
      [&](const tbb::blocked_range<int>& r, Acc acc) {
        for (int first = r.begin(); first != r.end(); ++first) {
          std::vector<int> word{first};
          for (int l = 1; l <= n; ++l) {
            if (l != first) word.push_back(l);
          }
          do {
            visit(acc, Permutation(word));
          } while (std::next_permutation(word.begin() + 1, word.end()));
        }
        return acc;
      },
      combine);
}

/// Sum over S_n of p^(13-2) q^(31-2) r^(2-13) s^(2-31), in symbols p, q, r, s.
Poly p4(int n);

/// The four-variable symmetry group check. Verifies the three generators of
/// the Z2 x Z2 symmetry; with `check_stabilizer` also verifies that no other
/// permutation of (p, q, r, s) fixes the polynomial.
CheckReport check_z2z2_symmetry(int n, bool check_stabilizer);
CheckReport check_z2z2_symmetry(const Poly& p4n, bool check_stabilizer);

/// The four one-variable-at-1 symmetry relations.
CheckReport check_trivariate_conjecture(const Poly& p4n);
CheckReport check_trivariate_conjecture(int n);

/// (2-13, 31-2) and (2-31, 31-2) have the same joint distribution.
CheckReport check_pair_equidistribution(int n);

/// Sum of p^(2-13) q^(31-2) against the S-fraction with alpha = [k]_{p,q}.
CheckReport pq_sfraction_check(int n_max);

/// The four pattern totals are equidistributed individually.
CheckReport claesson_equidistribution_check(int n);

/// [k]_{p,q} = sum_{i<k} p^i q^(k-1-i).
Poly pq_integer(unsigned k);

}  // namespace tfrac
