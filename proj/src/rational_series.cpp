// SPDX-License-Identifier: MIT
#include "tfrac/rational_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfrac {

RationalSeries RationalSeries::from_integer_series(const Series& s) {
  RationalSeries r(s.order());
  for (unsigned n = 0; n <= s.order(); ++n) r.coeffs_[n] = mpq_class(s[n].to_integer());
  return r;
}

bool RationalSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& q) { return q == 0; });
}

RationalSeries RationalSeries::scaled(const mpq_class& c) const {
  RationalSeries r = *this;
  for (auto& q : r.coeffs_) q *= c;
  return r;
}

RationalSeries RationalSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("rational series inverse: zero constant term");
  RationalSeries g(order());
  g.coeffs_[0] = 1 / coeffs_[0];
  for (unsigned n = 1; n <= order(); ++n) {
    mpq_class acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += coeffs_[k] * g.coeffs_[n - k];
    g.coeffs_[n] = -acc * g.coeffs_[0];
  }
  return g;
}

RationalSeries RationalSeries::derivative() const {
  RationalSeries d(order() == 0 ? 0 : order() - 1);
  for (unsigned n = 1; n <= order(); ++n) d.coeffs_[n - 1] = coeffs_[n] * n;
  return d;
}

RationalSeries RationalSeries::compose(const RationalSeries& g) const {
  if (g.coeffs_[0] != 0) throw std::domain_error("compose: inner series must vanish at 0");
  const unsigned n = std::min(order(), g.order());
  RationalSeries inner(std::vector<mpq_class>(g.coeffs_.begin(), g.coeffs_.begin() + n + 1));
  // Horner evaluation.
  RationalSeries acc(n);
  for (unsigned k = order() + 1; k-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += coeffs_[k];
  }
  return acc;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (unsigned n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  return a + b.scaled(-1);
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (unsigned n = 0; n <= r.order(); ++n) {
    if (a.coeffs_[n] == 0) continue;
    for (unsigned m = 0; n + m <= r.order(); ++m) r.coeffs_[n + m] += a.coeffs_[n] * b.coeffs_[m];
  }
  return r;
}

}  // namespace tfrac
