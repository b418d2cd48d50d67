// SPDX-License-Identifier: MIT
#include "tfrac/tree_polynomials.hpp"

#include <stdexcept>

namespace tfrac {

SimpleWeights SimpleWeights::ones() { return {1, 1, 1, 1, 1, 1}; }

Substitution SimpleWeights::substitution() const {
  return {{IndexedSymbol("x1"), x1}, {IndexedSymbol("x2"), x2}, {IndexedSymbol("y1"), y1},
          {IndexedSymbol("y2"), y2}, {IndexedSymbol("w"), w},   {IndexedSymbol("z"), z}};
}

namespace {

std::string_view simple_letter(NodeType t) {
  if (t.middle) return "w";
  if (t.left) return t.right ? "x1" : "x2";
  return t.right ? "y2" : "y1";
}

std::string_view master_letter(NodeType t) {
  if (t.middle) return "f";
  if (t.left) return t.right ? "a" : "c";
  return t.right ? "d" : "b";
}

class MonomialBuilder {
 public:
  void add(const IndexedSymbol& s, std::uint32_t e = 1) {
    if (e > 0) factors_.emplace_back(s, e);
  }
  [[nodiscard]] Monomial build() { return Monomial::from_factors(std::move(factors_)); }

 private:
  std::vector<Monomial::Factor> factors_;
};

/// The letters shared by the star and IRT weights: bh/ah by left child,
/// mu/nu by right child, or f for a middle child. Returns the level at which
/// the e letter of this vertex is indexed.
unsigned split_letters(MonomialBuilder& m, const VertexStats& st) {
  const auto croix = static_cast<unsigned>(st.croix);
  const auto nid = static_cast<unsigned>(st.nid);
  const auto lev = static_cast<unsigned>(st.lev);
  const NodeType t = st.node_type;
  if (t.middle) {
    m.add(IndexedSymbol("f", croix, nid));
    return lev;
  }
  m.add(IndexedSymbol(t.left ? "ah" : "bh", croix, nid));
  if (t.left && t.right) {
    m.add(IndexedSymbol("mu", lev + 1));
    return lev + 1;
  }
  if (!t.left && !t.right) {
    if (lev == 0) throw std::logic_error("interior leaf at level 0");
    m.add(IndexedSymbol("nu", lev - 1));
    return lev;
  }
  if (t.left) {
    m.add(IndexedSymbol("nu", lev));
    return lev + 1;
  }
  m.add(IndexedSymbol("mu", lev));
  return lev;
}

template <class WeightFn>
Poly sum_trees(Family f, int n, WeightFn weight) {
  return reduce_trees(
             f, n, PolyAccumulator{}, [&](PolyAccumulator& acc, const TreeShape& s) { acc.add(weight(s)); },
             [](PolyAccumulator a, const PolyAccumulator& b) {
               a.merge(b);
               return a;
             })
      .to_poly();
}

template <class WeightFn>
Poly sum_irts(int n, WeightFn weight) {
  return reduce_irts(
             n, PolyAccumulator{}, [&](PolyAccumulator& acc, const IntervalTree& t) { acc.add(weight(t)); },
             [](PolyAccumulator a, const PolyAccumulator& b) {
               a.merge(b);
               return a;
             })
      .to_poly();
}

}  // namespace

Monomial simple_weight(const TreeShape& shape) {
  MonomialBuilder m;
  for (int v = 0; v < shape.size(); ++v) m.add(IndexedSymbol(simple_letter(shape.node_type(v))));
  return m.build();
}

Monomial simple_weight(const IntervalTree& t) {
  MonomialBuilder m;
  std::uint32_t surplus = 0;
  for (int v = 0; v < t.shape.size(); ++v) {
    if (v > 0) m.add(IndexedSymbol(simple_letter(t.shape.node_type(v))));
    surplus += static_cast<std::uint32_t>(t.labels[v].surplus());
  }
  m.add(IndexedSymbol("z"), surplus);
  return m.build();
}

Monomial master_weight(const TreeShape& shape, Traversal a) {
  MonomialBuilder m;
  for (const auto& st : vertex_stats(shape, a)) {
    m.add(IndexedSymbol(master_letter(st.node_type), static_cast<unsigned>(st.croix), static_cast<unsigned>(st.nid)));
  }
  return m.build();
}

Monomial star_weight(const TreeShape& shape, Traversal a) {
  MonomialBuilder m;
  if (shape.empty()) return m.build();
  m.add(IndexedSymbol("mu", 0));
  m.add(IndexedSymbol("bh", 0, 0));
  const auto stats = vertex_stats(shape, a);
  for (std::size_t v = 0; v + 1 < stats.size(); ++v) split_letters(m, stats[v]);
  return m.build();
}

Monomial irt_master_weight(const IntervalTree& t, Traversal a) {
  MonomialBuilder m;
  const auto stats = vertex_stats(t, a);
  const auto last = stats.size() - 1;
  for (std::size_t v = 0; v < stats.size(); ++v) {
    const auto surplus = static_cast<std::uint32_t>(stats[v].label_surplus);
    if (t.trivial()) {
      m.add(IndexedSymbol("e", 0), surplus);
    } else if (v == 0) {
      m.add(IndexedSymbol("mu", 0));
      m.add(IndexedSymbol("e", 0), surplus);
    } else if (v == last) {
      m.add(IndexedSymbol("bh", 0, 0));
      m.add(IndexedSymbol("e", 0), surplus);
    } else {
      const unsigned e_level = split_letters(m, stats[v]);
      m.add(IndexedSymbol("e", e_level), surplus);
    }
  }
  return m.build();
}

Monomial permutation_weight(const Permutation& sigma) {
  MonomialBuilder m;
  for (int i = 1; i <= sigma.size(); ++i) {
    const int letter = sigma.at(i);
    const auto croix = static_cast<unsigned>(pattern_count(sigma, letter, Pattern::p2_13));
    const auto nid = static_cast<unsigned>(pattern_count(sigma, letter, Pattern::p31_2));
    std::string_view base;
    switch (linear_class(sigma, i)) {
      case LinearClass::valley:
        base = "a";
        break;
      case LinearClass::peak:
        base = "b";
        break;
      case LinearClass::double_descent:
        base = "c";
        break;
      case LinearClass::double_ascent:
        base = "d";
        break;
    }
    m.add(IndexedSymbol(base, croix, nid));
  }
  return m.build();
}

Poly p_bt(int n, const SimpleWeights& weights) {
  return specialize(sum_trees(Family::binary, n, [](const TreeShape& s) { return simple_weight(s); }),
                    weights.substitution());
}

Poly p_rt(int n, const SimpleWeights& weights) {
  return specialize(sum_trees(Family::ternary, n, [](const TreeShape& s) { return simple_weight(s); }),
                    weights.substitution());
}

Poly p_irt(int n, const SimpleWeights& weights) {
  return specialize(sum_irts(n, [](const IntervalTree& t) { return simple_weight(t); }), weights.substitution());
}

Poly q_bt(int n, Traversal a) {
  return sum_trees(Family::binary, n, [a](const TreeShape& s) { return master_weight(s, a); });
}

Poly q_rt(int n, Traversal a) {
  return sum_trees(Family::ternary, n, [a](const TreeShape& s) { return master_weight(s, a); });
}

Poly q_star_rt(int n, Traversal a) {
  return sum_trees(Family::ternary, n, [a](const TreeShape& s) { return star_weight(s, a); });
}

Poly q_irt(int n, Traversal a) {
  return sum_irts(n, [a](const IntervalTree& t) { return irt_master_weight(t, a); });
}

Poly p_perm_star(int n) {
  return reduce_permutations(
             n, PolyAccumulator{},
             [](PolyAccumulator& acc, const Permutation& s) { acc.add(permutation_weight(s)); },
             [](PolyAccumulator a, const PolyAccumulator& b) {
               a.merge(b);
               return a;
             })
      .to_poly();
}

}  // namespace tfrac
