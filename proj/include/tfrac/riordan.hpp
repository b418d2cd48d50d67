// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfrac/continued_fraction.hpp"
#include "tfrac/rational_series.hpp"
#include "tfrac/report.hpp"
#include "tfrac/symbolic.hpp"
#include "tfrac/tree_polynomials.hpp"

namespace tfrac {

class SingularDiagonal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Square N x N matrix truncation of an infinite lower-triangular or
/// lower-Hessenberg matrix.
template <class Scalar>
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t size) : size_(size), entries_(size * size, Scalar(0)) {}

  static TriMatrix identity(std::size_t size) {
    TriMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = Scalar(1);
    return m;
  }
  /// 1 on the superdiagonal.
  static TriMatrix shift(std::size_t size) {
    TriMatrix m(size);
    for (std::size_t i = 0; i + 1 < size; ++i) m(i, i + 1) = Scalar(1);
    return m;
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  Scalar& operator()(std::size_t row, std::size_t col) { return entries_.at(row * size_ + col); }
  const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_.at(row * size_ + col); }

  /// Zero above the diagonal plus `band` superdiagonals.
  [[nodiscard]] bool is_banded_below(std::size_t band) const {
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = i + band + 1; j < size_; ++j) {
        if ((*this)(i, j) != Scalar(0)) return false;
      }
    }
    return true;
  }
  [[nodiscard]] bool is_lower_triangular() const { return is_banded_below(0); }
  [[nodiscard]] bool is_lower_hessenberg() const { return is_banded_below(1); }

  /// Leading principal submatrix.
  [[nodiscard]] TriMatrix leading(std::size_t size) const {
    TriMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) m(i, j) = (*this)(i, j);
    }
    return m;
  }

  friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
    if (a.size_ != b.size_) throw std::invalid_argument("matrix sizes differ");
    TriMatrix out(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      for (std::size_t k = 0; k < a.size_; ++k) {
        if (a(i, k) == Scalar(0)) continue;
        for (std::size_t j = 0; j < a.size_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }
  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<Scalar> entries_;
};

using RationalMatrix = TriMatrix<mpq_class>;
using PolyMatrix = TriMatrix<Poly>;

/// Exponential generating functions: coefficient n stands for c_n t^n / n!.
struct EgfPair {
  RationalSeries f;
  RationalSeries g;  // zero constant term
};

/// Exponential coefficients c_n to ordinary ones c_n / n!, and back.
RationalSeries egf_to_ordinary(const RationalSeries& egf);
RationalSeries ordinary_to_egf(const RationalSeries& ordinary);

/// R[F,G]_{nk} = n!/k! [t^n] F G^k for 0 <= n, k < size.
RationalMatrix riordan_matrix(const EgfPair& pair, std::size_t size);

/// P = L^{-1} Delta L. Row `size-1` of Delta L needs an unknown row of L, so
/// the result is one smaller than L. Throws SingularDiagonal.
RationalMatrix production_matrix(const RationalMatrix& lower);

/// a_{nk} = (P^n)_{0k} for 0 <= n, k < size; requires P.size() >= size.
template <class Scalar>
TriMatrix<Scalar> output_matrix(const TriMatrix<Scalar>& production, std::size_t size) {
  if (production.size() < size) throw std::invalid_argument("production matrix is smaller than the output");
  TriMatrix<Scalar> out(size);
  const std::size_t width = production.size();
  std::vector<Scalar> row(width, Scalar(0));
  if (size > 0) row[0] = Scalar(1);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t k = 0; k < size; ++k) out(n, k) = row[k];
    std::vector<Scalar> next(width, Scalar(0));
    for (std::size_t m = 0; m < width; ++m) {
      if (row[m] == Scalar(0)) continue;
      for (std::size_t k = 0; k < width; ++k) {
        if (production(m, k) != Scalar(0)) next[k] += row[m] * production(m, k);
      }
    }
    row = std::move(next);
  }
  return out;
}

/// The A- and Z-sequences read off a production matrix of exponential
/// Riordan shape, p_{nk} = n!/k! (z_{n-k} + k a_{n-k+1}).
struct ProductionCheck {
  CheckReport report;
  RationalSeries a_series{0};
  RationalSeries z_series{0};
};

/// Builds R[F,G], its production matrix, recovers A(s) and Z(s), and checks
/// the entry formula together with G' = A(G) and F'/F = Z(G).
ProductionCheck check_exp_riordan_production(const EgfPair& pair, std::size_t size);

/// Production matrix of R[G', G] for increasing ordered trees with vertex
/// weights phi_i by child count: p_{nk} = (n+1)!/k! phi_{n-k+1}.
PolyMatrix lah_production(const CoeffSeq& phi, std::size_t size);

/// phi_0 = y1, phi_1 = x2 + y2 (+ w for rt), phi_2 = x1, higher phi = 0.
CoeffSeq simple_phi(SimpleFamily family, const SimpleWeights& weights);

/// The tridiagonal production matrix with rise weights moved onto falls:
/// gamma_n = (n+1) phi_1, beta_n = n(n+1) phi_0 phi_2.
JFractionSpec simple_fraction_via_production(SimpleFamily family, const SimpleWeights& weights);

/// y1 times column 0 of the output matrix, and y1 times the J-fraction, both
/// equal the tree-side polynomials P_{n+1} for n < size.
CheckReport check_production_route(SimpleFamily family, std::size_t size);

/// sum P^IRT_n t^n = 1/(1-zt) sum P^RT_n(x/(1-zt), y/(1-zt), w) t^n, to `order`.
CheckReport check_irt_from_rt(unsigned order);

/// Rows as comma-separated values, one row per line.
template <class Scalar>
std::string to_csv(const TriMatrix<Scalar>& m);
extern template std::string to_csv(const RationalMatrix&);
extern template std::string to_csv(const PolyMatrix&);

}  // namespace tfrac
