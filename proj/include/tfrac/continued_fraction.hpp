// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfrac/symbolic.hpp"

namespace tfrac {

class OddDeltaNonzero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TerminatingFraction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A total map from a positive (or, for gamma, non-negative) index to a Poly,
/// given either by a rule or by a finite table with an explicit default.
class CoeffSeq {
 public:
  using Rule = std::function<Poly(unsigned)>;

  CoeffSeq();  // identically zero
  static CoeffSeq rule(Rule r, std::string description = "rule");
  static CoeffSeq table(std::vector<Poly> values, Poly fallback = 0, unsigned first_index = 1);
  static CoeffSeq constant(Poly value);

  [[nodiscard]] Poly operator()(unsigned index) const { return rule_(index); }
  [[nodiscard]] const std::string& description() const noexcept { return description_; }

 private:
  CoeffSeq(Rule r, std::string description);
  Rule rule_;
  std::string description_;
};

/// 1 / (1 - delta_1 t - alpha_1 t / (1 - delta_2 t - alpha_2 t / ...)).
struct TFractionSpec {
  CoeffSeq alpha;
  CoeffSeq delta;
};

/// 1 / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - beta_2 t^2 / ...)).
struct JFractionSpec {
  CoeffSeq gamma;  // indexed from 0
  CoeffSeq beta;   // indexed from 1
};

/// 1 / (1 - alpha_1 t / (1 - alpha_2 t / ...)).
struct SFractionSpec {
  CoeffSeq alpha;
};

/// Period-2 quasi-affine coefficients:
/// alpha_{2k-1} = x+(k-1)u, alpha_{2k} = y+(k-1)v,
/// delta_{2k-1} = a+(k-1)c, delta_{2k} = b+(k-1)d.
struct QuasiAffineSpec {
  Poly x, y, u, v, a, b, c, d;

  /// Tuple order (x, y, u, v, a, b, c, d).
  static QuasiAffineSpec from_tuple(const std::vector<long>& values);
};

TFractionSpec quasi_affine(const QuasiAffineSpec& spec);

/// Taylor series of the T-fraction to order N. The fraction is truncated at
/// `depth` levels (tail replaced by 1); depth N is already exact to order N.
Series expand_t(const TFractionSpec& spec, unsigned order);
Series expand_t(const TFractionSpec& spec, unsigned order, unsigned depth);
Series expand_j(const JFractionSpec& spec, unsigned order);
Series expand_j(const JFractionSpec& spec, unsigned order, unsigned depth);
Series expand_s(const SFractionSpec& spec, unsigned order);

/// T-fraction whose coefficients are themselves power series in t, i.e.
/// level k contributes 1 - t*delta_k(t) - t*alpha_k(t)*f_{k+1}.
using SeriesCoeffs = std::function<Series(unsigned index, unsigned order)>;
Series expand_t_series(const SeriesCoeffs& alpha, const SeriesCoeffs& delta, unsigned order);

struct OddContraction {
  Poly alpha1;
  JFractionSpec j;
};

/// Contracts a T-fraction with vanishing odd deltas into alpha_1 and a
/// J-fraction: T = 1 + alpha_1 t J. Odd deltas are probed up to `probe_order`.
OddContraction odd_contract(const TFractionSpec& spec, unsigned probe_order);

/// Full T-fraction spec from separate alpha, even-delta and odd-delta sequences.
TFractionSpec insert_odd_delta(const CoeffSeq& alpha, const CoeffSeq& delta_even,
                               const CoeffSeq& delta_odd);

/// Left side of the transformation identity: the T-fraction with only even
/// deltas whose alphas are divided by (1 - delta_odd t) as appropriate,
/// multiplied by 1/(1 - delta_1 t).
Series transformed_expansion(const CoeffSeq& alpha, const CoeffSeq& delta_even,
                             const CoeffSeq& delta_odd, unsigned order);

/// Tabulated J-fraction coefficients over the rationals.
struct RationalJFraction {
  std::vector<mpq_class> gamma;  // gamma_0 .. gamma_{g-1}
  std::vector<mpq_class> beta;   // beta_1 .. beta_b (stored from index 0)
  bool terminated = false;       // the series is a finite J-fraction

  /// Integer-valued spec; throws if any coefficient is non-integral.
  [[nodiscard]] JFractionSpec to_spec() const;
};

/// Recovers J-fraction coefficients from a symbol-free series with constant
/// term 1, peeling one level at a time for up to `depth` levels.
RationalJFraction series_to_jfraction(const Series& s, unsigned depth);

/// Evaluates a coefficient sequence into a vector (indices first..last).
std::vector<Poly> tabulate(const CoeffSeq& seq, unsigned first, unsigned last);

}  // namespace tfrac
