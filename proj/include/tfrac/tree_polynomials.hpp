// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>

#include "tfrac/permutations.hpp"
#include "tfrac/symbolic.hpp"
#include "tfrac/trees.hpp"

namespace tfrac {

/// Tree family of the simple J-fractions.
enum class SimpleFamily : std::uint8_t { bt, rt };

/// Node-type weights for the simple polynomials. Each defaults to its own
/// symbol (x1, x2, y1, y2, w, z).
struct SimpleWeights {
  Poly x1 = Poly::symbol("x1");  // two children (11 / 101)
  Poly x2 = Poly::symbol("x2");  // left child only (10 / 100)
  Poly y1 = Poly::symbol("y1");  // leaf
  Poly y2 = Poly::symbol("y2");  // right child only (01 / 001)
  Poly w = Poly::symbol("w");    // middle child (010)
  Poly z = Poly::symbol("z");    // one per unit of label surplus

  static SimpleWeights ones();
  [[nodiscard]] Substitution substitution() const;
};

// Per-tree weights as monomials in the default symbols.

/// x1^I(11) y1^I(00) x2^I(10) y2^I(01) w^I(010) over all vertices.
Monomial simple_weight(const TreeShape& shape);
/// Node-type letters on non-root vertices, times z^(total label surplus).
Monomial simple_weight(const IntervalTree& t);
/// Letters a/b/c/d/f by node type, indexed (croix, nid).
Monomial master_weight(const TreeShape& shape, Traversal a);
/// mu0 bh(0,0) times the split-letter weights of vertices 1..n-1.
Monomial star_weight(const TreeShape& shape, Traversal a);
/// Root, final-vertex and interior weights with e letters for label surplus.
Monomial irt_master_weight(const IntervalTree& t, Traversal a);
/// Letters a/b/c/d by linear class, indexed ((2-13), (31-2)).
Monomial permutation_weight(const Permutation& sigma);

// Generating polynomials; the weights are substituted after summation.

Poly p_bt(int n, const SimpleWeights& weights = {});
Poly p_rt(int n, const SimpleWeights& weights = {});
Poly p_irt(int n, const SimpleWeights& weights = {});
Poly q_bt(int n, Traversal a);
Poly q_rt(int n, Traversal a);
Poly q_star_rt(int n, Traversal a);
Poly q_irt(int n, Traversal a);
Poly p_perm_star(int n);

}  // namespace tfrac
