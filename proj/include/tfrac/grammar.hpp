// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "tfrac/report.hpp"
#include "tfrac/symbolic.hpp"
#include "tfrac/tree_polynomials.hpp"

namespace tfrac {

/// variable -> image of one grammar rule.
struct DerivationRule {
  IndexedSymbol variable;
  Poly image;
};

/// A derivation on Poly: sum over rules of image * d/d(variable). Variables
/// without a rule derive to 0.
class DerivativeOperator {
 public:
  explicit DerivativeOperator(std::vector<DerivationRule> rules);

  [[nodiscard]] Poly apply(const Poly& p) const;
  /// The operator applied `times` times to the seed.
  [[nodiscard]] Poly iterate(const Poly& seed, unsigned times) const;
  [[nodiscard]] const std::vector<DerivationRule>& rules() const noexcept { return rules_; }
  /// Rules as "{v -> image, ...}".
  [[nodiscard]] std::string str() const;

 private:
  std::vector<DerivationRule> rules_;
};

/// y1 -> y1 (x2 + y2 [+ w]), x2 -> x1 y1, y2 -> x1 y1.
DerivativeOperator tree_operator(SimpleFamily family);
/// x -> 2 x y, y -> x.
DerivativeOperator dumont_operator();

/// D^(n-1) y1 equals the tree enumeration P_n for 1 <= n <= max_n.
CheckReport check_grammar(SimpleFamily family, int max_n);
/// With x1 = 1, y1 = x, x2 = y2 = y the binary-tree operator acts like the
/// Dumont rule on every monomial x^i y^j of degree <= max_degree.
CheckReport check_dumont_specialization(unsigned max_degree);

}  // namespace tfrac
