// SPDX-License-Identifier: MIT
#include "tfrac/grammar.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace tfrac {

DerivativeOperator::DerivativeOperator(std::vector<DerivationRule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = i + 1; j < rules_.size(); ++j) {
      if (rules_[i].variable == rules_[j].variable) {
        throw std::invalid_argument(fmt::format("two rules for {}", rules_[i].variable.str()));
      }
    }
  }
}

Poly DerivativeOperator::apply(const Poly& p) const {
  PolyAccumulator acc;
  for (const auto& term : p.terms()) {
    // Leibniz rule: each occurrence of a ruled variable is replaced in turn.
    for (const auto& rule : rules_) {
      const std::uint32_t e = term.mono.exponent_of(rule.variable);
      if (e == 0) continue;
      const Poly rest(term.mono.without_one(rule.variable), term.coeff * e);
      acc.add(rest * rule.image);
    }
  }
  return acc.to_poly();
}

Poly DerivativeOperator::iterate(const Poly& seed, unsigned times) const {
  Poly p = seed;
  for (unsigned k = 0; k < times; ++k) p = apply(p);
  return p;
}

std::string DerivativeOperator::str() const {
  std::vector<std::string> parts;
  for (const auto& r : rules_) parts.push_back(fmt::format("{} -> {}", r.variable.str(), r.image.str()));
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "}";
}

DerivativeOperator tree_operator(SimpleFamily family) {
  const Poly x1 = Poly::symbol("x1"), x2 = Poly::symbol("x2"), y1 = Poly::symbol("y1"), y2 = Poly::symbol("y2");
  const Poly unary = family == SimpleFamily::rt ? x2 + y2 + Poly::symbol("w") : x2 + y2;
  return DerivativeOperator({{IndexedSymbol("y1"), y1 * unary},
                             {IndexedSymbol("x2"), x1 * y1},
                             {IndexedSymbol("y2"), x1 * y1}});
}

DerivativeOperator dumont_operator() {
  const Poly x = Poly::symbol("x"), y = Poly::symbol("y");
  return DerivativeOperator({{IndexedSymbol("x"), x * y * mpz_class(2)}, {IndexedSymbol("y"), x}});
}

CheckReport check_grammar(SimpleFamily family, int max_n) {
  CheckReport report;
  const DerivativeOperator d = tree_operator(family);
  Poly current = Poly::symbol("y1");
  for (int n = 1; n <= max_n; ++n) {
    const Poly trees = family == SimpleFamily::rt ? p_rt(n) : p_bt(n);
    if (current != trees) report.fail(fmt::format("n = {}: grammar gives {}, trees give {}", n, current.str(), trees.str()));
    current = d.apply(current);
  }
  if (report.pass) report.detail = fmt::format("D^(n-1) y1 = P_n for n <= {}", max_n);
  return report;
}

CheckReport check_dumont_specialization(unsigned max_degree) {
  CheckReport report;
  const DerivativeOperator tree = tree_operator(SimpleFamily::bt);
  const DerivativeOperator dumont = dumont_operator();
  const Poly x = Poly::symbol("x"), y = Poly::symbol("y");
  const Substitution to_dumont{{IndexedSymbol("x1"), 1}, {IndexedSymbol("y1"), x}, {IndexedSymbol("x2"), y},
                               {IndexedSymbol("y2"), y}};
  const Poly y1 = Poly::symbol("y1"), x2 = Poly::symbol("x2"), y2 = Poly::symbol("y2");
  unsigned checked = 0;
  for (unsigned degree = 0; degree <= max_degree; ++degree) {
    for (unsigned i = 0; i <= degree; ++i) {
      const unsigned j = degree - i;
      const Poly target = dumont.apply(x.pow(i) * y.pow(j));
      // Every lift of y^j splits its factors between x2 and y2.
      for (unsigned split = 0; split <= j; ++split) {
        ++checked;
        const Poly lifted = y1.pow(i) * x2.pow(split) * y2.pow(j - split);
        const Poly image = specialize(tree.apply(lifted), to_dumont);
        if (image != target) {
          report.fail(fmt::format("on {}: specialized action {} but Dumont gives {}", lifted.str(), image.str(),
                                  target.str()));
        }
      }
    }
  }
  if (report.pass) report.detail = fmt::format("{} lifted monomials up to degree {} agree", checked, max_degree);
  return report;
}

}  // namespace tfrac
