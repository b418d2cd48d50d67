// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <vector>

#include "tfrac/symbolic.hpp"

namespace tfrac {

/// Truncated power series with exact rational coefficients (symbol-free).
class RationalSeries {
 public:
  explicit RationalSeries(unsigned order) : coeffs_(order + 1) {}
  explicit RationalSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }
  static RationalSeries from_integer_series(const Series& s);

  [[nodiscard]] unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  [[nodiscard]] const mpq_class& coeff(unsigned n) const { return coeffs_.at(n); }
  [[nodiscard]] mpq_class& coeff(unsigned n) { return coeffs_.at(n); }
  [[nodiscard]] const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] RationalSeries scaled(const mpq_class& c) const;
  /// Requires a nonzero constant term.
  [[nodiscard]] RationalSeries inverse() const;
  [[nodiscard]] RationalSeries derivative() const;
  /// this(g(t)); g must have zero constant term.
  [[nodiscard]] RationalSeries compose(const RationalSeries& g) const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpq_class> coeffs_;
};

}  // namespace tfrac
