// SPDX-License-Identifier: MIT
#include "tfrac/theorems.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <tbb/parallel_for.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <memory>
#include <random>

#include "tfrac/bijections.hpp"
#include "tfrac/continued_fraction.hpp"
#include "tfrac/grammar.hpp"
#include "tfrac/lattice_paths.hpp"
#include "tfrac/permutations.hpp"
#include "tfrac/riordan.hpp"
#include "tfrac/tree_polynomials.hpp"

namespace tfrac {
namespace {

/// Maps every coefficient on both sides of an identity to the ring in which
/// the comparison happens.
class Valuation {
 public:
  Valuation(Evaluation mode, std::optional<Substitution> specialization)
      : specialization_(std::move(specialization)) {
    if (mode == Evaluation::prime_specialized) primes_ = std::make_shared<PrimeValuation>();
  }

  [[nodiscard]] Poly operator()(const Poly& p) const {
    Poly out = specialization_ ? specialize(p, *specialization_) : p;
    return primes_ ? specialize(out, primes_->resolver()) : out;
  }

  [[nodiscard]] CoeffSeq operator()(const CoeffSeq& seq) const {
    return CoeffSeq::rule([seq, self = *this](unsigned i) { return self(seq(i)); }, seq.description());
  }

 private:
  std::optional<Substitution> specialization_;
  std::shared_ptr<PrimeValuation> primes_;
};

struct Context {
  unsigned order = 0;
  Traversal traversal = Traversal::preorder;
  Valuation value;
  std::uint64_t seed = 0;
  unsigned trials = 0;
};

using Check = CheckReport (*)(const Context&);

std::string clip(const std::string& s) {
  constexpr std::size_t kMax = 160;
  return s.size() <= kMax ? s : s.substr(0, kMax) + "...";
}

CheckReport compare(const Series& trees, const Series& fraction, std::string_view what) {
  CheckReport report;
  const unsigned order = std::min(trees.order(), fraction.order());
  for (unsigned n = 0; n <= order; ++n) {
    if (trees[n] != fraction[n]) {
      report.fail(fmt::format("t^{}: {} gives {}, fraction gives {}", n, what, clip(trees[n].str()),
                              clip(fraction[n].str())));
      return report;
    }
  }
  report.detail = fmt::format("{} matches through t^{}", what, order);
  return report;
}

/// sum_{n=0}^{N} value(poly(n + shift)) t^n.
Series tree_series(const Context& ctx, int shift, const std::function<Poly(int)>& poly) {
  Series s(ctx.order);
  for (unsigned n = 0; n <= ctx.order; ++n) s[n] = ctx.value(poly(static_cast<int>(n) + shift));
  return s;
}

Series integer_series(unsigned order, int shift, const std::function<std::uint64_t(int)>& count) {
  Series s(order);
  for (unsigned n = 0; n <= order; ++n) s[n] = Poly(mpz_class(count(static_cast<int>(n) + shift)));
  return s;
}

Series expand(const Context& ctx, const TFractionSpec& spec) {
  return expand_t({ctx.value(spec.alpha), ctx.value(spec.delta)}, ctx.order);
}
Series expand(const Context& ctx, const JFractionSpec& spec) {
  return expand_j({ctx.value(spec.gamma), ctx.value(spec.beta)}, ctx.order);
}
Series expand(const Context& ctx, const SFractionSpec& spec) {
  return expand_s({ctx.value(spec.alpha)}, ctx.order);
}

Poly sym(std::string_view base) { return Poly::symbol(base); }
Poly sym(std::string_view base, unsigned i) { return Poly::symbol(base, i); }

/// sum_{xi=0}^{m} base(xi, m - xi).
Poly antidiagonal(std::string_view base, unsigned m) {
  Poly out;
  for (unsigned xi = 0; xi <= m; ++xi) out += Poly::symbol(base, xi, m - xi);
  return out;
}

CoeffSeq odd_even(std::function<Poly(unsigned k)> odd, std::function<Poly(unsigned k)> even,
                  std::string description) {
  return CoeffSeq::rule(
      [odd = std::move(odd), even = std::move(even)](unsigned i) {
        const unsigned k = (i + 1) / 2;
        return (i % 2 == 1) ? odd(k) : even(k);
      },
      std::move(description));
}

// ------------------------------------------------------ algebraic identities

CoeffSeq random_table(std::mt19937_64& rng, unsigned count, bool zero_odd, bool zero_even) {
  std::uniform_int_distribution<long> draw(-9, 9);
  std::vector<Poly> values;
  for (unsigned i = 1; i <= count; ++i) {
    const bool zero = (i % 2 == 1) ? zero_odd : zero_even;
    values.emplace_back(zero ? 0L : draw(rng));
  }
  return CoeffSeq::table(std::move(values));
}

CheckReport odd_contraction(const Context& ctx) {
  std::mt19937_64 rng(ctx.seed);
  const unsigned n = 2 * ctx.order + 2;
  for (unsigned trial = 0; trial < ctx.trials; ++trial) {
    const TFractionSpec spec{random_table(rng, n, false, false), random_table(rng, n, true, false)};
    const OddContraction c = odd_contract(spec, ctx.order);
    const Series rhs = Series::one(ctx.order) + expand_j(c.j, ctx.order).shifted().scaled(c.alpha1);
    CheckReport r = compare(expand_t(spec, ctx.order), rhs, "T-fraction");
    if (!r.pass) {
      r.detail = fmt::format("trial {}: {}", trial, r.detail);
      return r;
    }
  }
  return {true, fmt::format("{} random specs agree through t^{}", ctx.trials, ctx.order)};
}

CheckReport transformation(const Context& ctx) {
  std::mt19937_64 rng(ctx.seed);
  const unsigned n = 2 * ctx.order + 3;
  for (unsigned trial = 0; trial < ctx.trials; ++trial) {
    const CoeffSeq alpha = random_table(rng, n, false, false);
    const CoeffSeq delta_even = random_table(rng, n, true, false);
    const CoeffSeq delta_odd = random_table(rng, n, false, true);
    CheckReport r = compare(transformed_expansion(alpha, delta_even, delta_odd, ctx.order),
                            expand_t(insert_odd_delta(alpha, delta_even, delta_odd), ctx.order),
                            "transformed fraction");
    if (!r.pass) {
      r.detail = fmt::format("trial {}: {}", trial, r.detail);
      return r;
    }
  }
  return {true, fmt::format("{} random specs agree through t^{}", ctx.trials, ctx.order)};
}

CheckReport rt_to_irt_ogf(const Context& ctx) { return check_irt_from_rt(ctx.order); }

// -------------------------------------------------------- simple fractions

Poly x1() { return sym("x1"); }
Poly x2() { return sym("x2"); }
Poly y1() { return sym("y1"); }
Poly y2() { return sym("y2"); }
Poly w() { return sym("w"); }
Poly z() { return sym("z"); }

JFractionSpec simple_j(const Poly& gamma_unit) {
  return {CoeffSeq::rule([gamma_unit](unsigned n) { return gamma_unit * mpz_class(n + 1); }, "(n+1) gamma"),
          CoeffSeq::rule([](unsigned n) { return x1() * y1() * mpz_class(n * (n + 1)); }, "n(n+1) x1 y1")};
}

TFractionSpec simple_t(const Poly& delta_unit) {
  return {odd_even([](unsigned k) { return y1() * mpz_class(k); }, [](unsigned k) { return x1() * mpz_class(k); },
                   "k y1 | k x1"),
          odd_even([](unsigned) { return Poly(); }, [delta_unit](unsigned k) { return delta_unit * mpz_class(k); },
                   "0 | k delta")};
}

CheckReport bt_simple_j(const Context& ctx) {
  const Series trees = tree_series(ctx, 1, [](int n) { return p_bt(n); });
  return compare(trees, expand(ctx, simple_j(x2() + y2())).scaled(ctx.value(y1())), "P_{n+1}(BT)");
}

CheckReport bt_simple_t(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [](int n) { return p_bt(n); });
  return compare(trees, expand(ctx, simple_t(x2() + y2() - x1() - y1())), "P_n(BT)");
}

CheckReport bt_eulerian(const Context& ctx) {
  SimpleWeights diagonal;
  diagonal.x1 = diagonal.x2 = sym("x");
  diagonal.y1 = diagonal.y2 = sym("y");
  const Series trees = tree_series(ctx, 0, [&](int n) { return p_bt(n, diagonal); });
  const SFractionSpec s{odd_even([](unsigned k) { return sym("y") * mpz_class(k); },
                                 [](unsigned k) { return sym("x") * mpz_class(k); }, "k y | k x")};
  return compare(trees, expand(ctx, s), "P_n(x,x,y,y)");
}

CheckReport rt_simple_j(const Context& ctx) {
  const Series trees = tree_series(ctx, 1, [](int n) { return p_rt(n); });
  return compare(trees, expand(ctx, simple_j(x2() + y2() + w())).scaled(ctx.value(y1())), "P_{n+1}(RT)");
}

CheckReport rt_simple_t(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [](int n) { return p_rt(n); });
  return compare(trees, expand(ctx, simple_t(x2() + y2() + w() - x1() - y1())), "P_n(RT)");
}

TFractionSpec irt_simple_fraction(const Poly& x, const Poly& y) {
  return {odd_even([y](unsigned k) { return y * mpz_class(k); }, [x](unsigned k) { return x * mpz_class(k); },
                   "k y | k x"),
          odd_even([](unsigned) { return z(); }, [](unsigned k) { return w() * mpz_class(k); }, "z | k w")};
}

CheckReport irt_simple_t(const Context& ctx) {
  SimpleWeights diagonal;
  diagonal.x1 = diagonal.x2 = sym("x");
  diagonal.y1 = diagonal.y2 = sym("y");
  const Series trees = tree_series(ctx, 0, [&](int n) { return p_irt(n, diagonal); });
  return compare(trees, expand(ctx, irt_simple_fraction(sym("x"), sym("y"))), "P_n(IRT; x,x,y,y)");
}

CheckReport irt_simple_new(const Context& ctx) {
  SimpleWeights balanced;
  balanced.y2 = x1() + y1() - x2();
  const Series trees = tree_series(ctx, 0, [&](int n) { return p_irt(n, balanced); });
  for (unsigned n = 0; n <= ctx.order; ++n) {
    const auto symbols = trees[n].symbols();
    if (std::find(symbols.begin(), symbols.end(), IndexedSymbol("x2")) != symbols.end()) {
      return {false, fmt::format("t^{}: x2 survives the substitution y2 = x1 + y1 - x2", n)};
    }
  }
  CheckReport r = compare(trees, expand(ctx, irt_simple_fraction(x1(), y1())), "P_n(IRT; y2 = x1+y1-x2)");
  if (r.pass) r.detail += "; x2 cancels";
  return r;
}

// ------------------------------------------------------------ count checks

CheckReport rt_j_counts(const Context& ctx) {
  const JFractionSpec j{CoeffSeq::rule([](unsigned n) { return Poly(long(3 * (n + 1))); }, "3(n+1)"),
                        CoeffSeq::rule([](unsigned n) { return Poly(long(n * (n + 1))); }, "n(n+1)")};
  return compare(integer_series(ctx.order, 1, count_rt), expand_j(j, ctx.order), "|RT_{n+1}|");
}

CheckReport rt_counts(const Context& ctx) {
  const auto k = [](unsigned i) { return Poly(long(i)); };
  const TFractionSpec t{odd_even(k, k, "k | k"), odd_even([](unsigned) { return Poly(); }, k, "0 | k")};
  return compare(integer_series(ctx.order, 0, count_rt), expand_t(t, ctx.order), "|RT_n|");
}

CheckReport irt_counts(const Context& ctx) {
  const auto k = [](unsigned i) { return Poly(long(i)); };
  const TFractionSpec t{odd_even(k, k, "k | k"), odd_even([](unsigned) { return Poly(1); }, k, "1 | k")};
  return compare(integer_series(ctx.order, 0, count_irt), expand_t(t, ctx.order), "|IRT_n|");
}

// -------------------------------------------------------- master fractions

JFractionSpec master_j(bool with_f) {
  const auto gamma = [with_f](unsigned n) {
    Poly g = antidiagonal("c", n) + antidiagonal("d", n);
    if (with_f) g += antidiagonal("f", n);
    return g;
  };
  const auto beta = [](unsigned n) { return antidiagonal("a", n - 1) * antidiagonal("b", n); };
  return {CoeffSeq::rule(gamma, "master gamma"), CoeffSeq::rule(beta, "master beta")};
}

TFractionSpec master_t(bool with_f) {
  const auto delta_even = [with_f](unsigned k) {
    Poly d = antidiagonal("c", k - 1) + antidiagonal("d", k - 1) - antidiagonal("a", k - 1) -
             antidiagonal("b", k - 1);
    if (with_f) d += antidiagonal("f", k - 1);
    return d;
  };
  return {odd_even([](unsigned k) { return antidiagonal("b", k - 1); },
                   [](unsigned k) { return antidiagonal("a", k - 1); }, "b sums | a sums"),
          odd_even([](unsigned) { return Poly(); }, delta_even, "0 | c+d(+f)-a-b sums")};
}

/// Star-weight T-fraction; with `e_odd` the odd deltas are e_{k-1}.
TFractionSpec star_t(bool e_odd) {
  return {odd_even([](unsigned k) { return sym("mu", k - 1) * antidiagonal("bh", k - 1); },
                   [](unsigned k) { return sym("nu", k - 1) * antidiagonal("ah", k - 1); },
                   "mu bh sums | nu ah sums"),
          odd_even([e_odd](unsigned k) { return e_odd ? sym("e", k - 1) : Poly(); },
                   [](unsigned k) { return antidiagonal("f", k - 1); }, "e | f sums")};
}

/// Renames c(i,j) -> a(i,j) and d(i,j) -> b(i,j).
Poly fold_cd(const Poly& p) {
  return specialize(p, SymbolResolver([](const IndexedSymbol& s) -> std::optional<Poly> {
    if (s.base() == "c") return Poly::symbol("a", s.index(0), s.index(1));
    if (s.base() == "d") return Poly::symbol("b", s.index(0), s.index(1));
    return std::nullopt;
  }));
}

CheckReport bt_master_j(const Context& ctx) {
  const Series trees = tree_series(ctx, 1, [&](int n) { return q_bt(n, ctx.traversal); });
  const Poly b00 = ctx.value(Poly::symbol("b", 0, 0));
  return compare(trees, expand(ctx, master_j(false)).scaled(b00), "Q_{n+1}(BT)");
}

CheckReport bt_master_t(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [&](int n) { return q_bt(n, ctx.traversal); });
  return compare(trees, expand(ctx, master_t(false)), "Q_n(BT)");
}

CheckReport bt_master_s(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [&](int n) { return fold_cd(q_bt(n, ctx.traversal)); });
  const SFractionSpec s{master_t(false).alpha};
  return compare(trees, expand(ctx, s), "Q_n(a,b,a,b)");
}

CheckReport rt_master_j(const Context& ctx) {
  const Series trees = tree_series(ctx, 1, [&](int n) { return q_rt(n, ctx.traversal); });
  const Poly b00 = ctx.value(Poly::symbol("b", 0, 0));
  return compare(trees, expand(ctx, master_j(true)).scaled(b00), "Q_{n+1}(RT)");
}

CheckReport rt_master_t(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [&](int n) { return q_rt(n, ctx.traversal); });
  return compare(trees, expand(ctx, master_t(true)), "Q_n(RT)");
}

CheckReport rt_master_t_folded(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [&](int n) { return fold_cd(q_rt(n, ctx.traversal)); });
  const TFractionSpec t{master_t(true).alpha,
                        odd_even([](unsigned) { return Poly(); },
                                 [](unsigned k) { return antidiagonal("f", k - 1); }, "0 | f sums")};
  return compare(trees, expand(ctx, t), "Q_n(a,b,a,b,f)");
}

CheckReport rt_master_star(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [&](int n) { return q_star_rt(n, ctx.traversal); });
  return compare(trees, expand(ctx, star_t(false)), "Q*_n(RT)");
}

CheckReport irt_master_t(const Context& ctx) {
  const Series trees = tree_series(ctx, 0, [&](int n) { return q_irt(n, ctx.traversal); });
  return compare(trees, expand(ctx, star_t(true)), "Q_n(IRT)");
}

CheckReport perm_master(const Context& ctx) {
  for (int n = 0; n <= static_cast<int>(ctx.order); ++n) {
    if (ctx.value(p_perm_star(n)) != ctx.value(q_bt(n, Traversal::inorder))) {
      return {false, fmt::format("n={}: P*_n differs from Q_n(BT, inorder)", n)};
    }
  }
  const Series perms = tree_series(ctx, 0, p_perm_star);
  CheckReport r = compare(perms, expand(ctx, master_t(false)), "P*_n");
  if (r.pass) r.detail += "; P*_n = Q_n(BT, inorder) termwise";
  return r;
}

// --------------------------------------------------------- labeled paths

/// Independent symbol per (step, height, label): U(h,l), D(h,l), L(h,l).
Poly generic_step(Step s, int height, const Label& label) {
  static constexpr std::array<std::string_view, 3> kBase{"U", "D", "L"};
  const auto code = static_cast<unsigned>(label.kind * 100 + label.value);
  return Poly::symbol(kBase[static_cast<int>(s)], static_cast<unsigned>(height), code);
}

CheckReport flajolet(const Context& ctx, PathKind kind, const LabelSets& sets) {
  const int stride = kind == PathKind::motzkin ? 1 : 2;
  Series paths(ctx.order);
  for (unsigned n = 0; n <= ctx.order; ++n) {
    paths[n] = ctx.value(flajolet_sum(kind, stride * static_cast<int>(n), generic_step, sets));
  }
  switch (kind) {
    case PathKind::motzkin:
      return compare(paths, expand(ctx, motzkin_fraction(generic_step, sets)), "labeled Motzkin paths");
    case PathKind::dyck:
      return compare(paths, expand(ctx, dyck_fraction(generic_step, sets)), "labeled Dyck paths");
    case PathKind::schroder:
      break;
  }
  return compare(paths, expand(ctx, schroder_fraction(generic_step, sets)), "labeled Schroder paths");
}

CheckReport flajolet_motzkin_check(const Context& ctx) {
  return flajolet(ctx, PathKind::motzkin, LabelSets::restricted_ternary());
}

CheckReport flajolet_dyck_check(const Context& ctx) {
  // Rises carry h+1 labels, falls one; the labeled count is (2n-1)!!.
  const LabelSets sets{[](Step s, int h) {
    std::vector<Label> out;
    if (s == Step::rise) {
      for (int v = 0; v <= h; ++v) out.push_back({0, v});
    } else if (s == Step::fall) {
      out.push_back({0, 0});
    }
    return out;
  }};
  return flajolet(ctx, PathKind::dyck, sets);
}

CheckReport flajolet_schroder_check(const Context& ctx) {
  CheckReport generic = flajolet(ctx, PathKind::schroder, LabelSets::interval_ternary());
  if (!generic.pass) return generic;
  // The master step weights on the same label sets give the IRT master fraction.
  Series paths(ctx.order);
  for (unsigned n = 0; n <= ctx.order; ++n) {
    paths[n] = ctx.value(flajolet_sum(PathKind::schroder, 2 * static_cast<int>(n), schroder_master_weights(),
                                      LabelSets::interval_ternary()));
  }
  CheckReport master = compare(paths, expand(ctx, star_t(true)), "master-weighted Schroder paths");
  if (master.pass) master.detail = generic.detail + "; " + master.detail;
  return master;
}

// ------------------------------------------------------------ permutations

CheckReport perm_pq(const Context& ctx) { return pq_sfraction_check(static_cast<int>(ctx.order)); }

CheckReport perm_equidist(const Context& ctx) {
  for (int n = 0; n <= static_cast<int>(ctx.order); ++n) {
    CheckReport r = check_pair_equidistribution(n);
    if (!r.pass) return r;
  }
  return {true, fmt::format("(2-13, 31-2) ~ (2-31, 31-2) for n <= {}", ctx.order)};
}

CheckReport croix_nid_translate(const Context& ctx) {
  for (int n = 0; n <= static_cast<int>(ctx.order); ++n) {
    const auto mismatch = reduce_trees(
        Family::binary, n, std::string(),
        [](std::string& acc, const TreeShape& shape) {
          if (!acc.empty()) return;
          const BinaryTree tree{shape};
          const Permutation sigma = bt_to_permutation(tree);
          const auto stats = vertex_stats(shape, Traversal::inorder);
          for (int v = 0; v < shape.size(); ++v) {
            const int letter = v + 1;
            if (stats[v].nid != pattern_count(sigma, letter, Pattern::p31_2) ||
                stats[v].croix != pattern_count(sigma, letter, Pattern::p2_13)) {
              acc = fmt::format("{} -> {}: letter {}", to_text(tree), sigma.str(), letter);
              return;
            }
          }
          if (master_weight(shape, Traversal::inorder) != permutation_weight(sigma)) {
            acc = fmt::format("{} -> {}: node types and linear classes disagree", to_text(tree), sigma.str());
          }
        },
        [](std::string a, const std::string& b) { return a.empty() ? b : a; });
    if (!mismatch.empty()) return {false, mismatch};
  }
  return {true, fmt::format("nid = 31-2 and croix = 2-13 on every tree with n <= {}", ctx.order)};
}

// ----------------------------------------------------------------- grammars

CheckReport grammar_bt(const Context& ctx) { return check_grammar(SimpleFamily::bt, static_cast<int>(ctx.order)); }
CheckReport grammar_rt(const Context& ctx) { return check_grammar(SimpleFamily::rt, static_cast<int>(ctx.order)); }

// ----------------------------------------------------------------- registry

struct Entry {
  TheoremId id;
  std::string_view name;
  std::string_view statement;
  unsigned order;
  bool master;
  bool randomized;
  Check check;
};

constexpr std::array<Entry, 30> kRegistry{{
    {TheoremId::prop_odd_contraction, "prop-odd-contraction",
     "T-fraction with zero odd deltas equals 1 + alpha_1 t J(contracted)", 8, false, true, odd_contraction},
    {TheoremId::prop_transformation, "prop-transformation",
     "odd deltas move into alpha/(1 - delta t) factors", 8, false, true, transformation},
    {TheoremId::thm_bt_simple_j, "thm-bt-simple-j", "P_{n+1}(BT) = y1 J((n+1)(x2+y2), n(n+1)x1y1)", 7, false,
     false, bt_simple_j},
    {TheoremId::thm_bt_simple_t, "thm-bt-simple-t", "P_n(BT) = T(k y1 | k x1; 0 | k(x2+y2-x1-y1))", 7, false,
     false, bt_simple_t},
    {TheoremId::cor_bt_s_eulerian, "cor-bt-s-eulerian", "P_n(x,x,y,y) = S(k y | k x), homogenized Eulerian", 7,
     false, false, bt_eulerian},
    {TheoremId::thm_bt_master_j, "thm-bt-master-j", "Q_{n+1}(BT) = b00 J(sum c+d, sum a * sum b)", 7, true,
     false, bt_master_j},
    {TheoremId::thm_bt_master_t, "thm-bt-master-t", "Q_n(BT) = T(sum b | sum a; 0 | sum c+d-a-b)", 7, true, false,
     bt_master_t},
    {TheoremId::cor_bt_master_s, "cor-bt-master-s", "Q_n(a,b,a,b) = S(sum b | sum a)", 7, true, false,
     bt_master_s},
    {TheoremId::thm_rt_simple_j, "thm-rt-simple-j", "P_{n+1}(RT) = y1 J((n+1)(x2+y2+w), n(n+1)x1y1)", 7, false,
     false, rt_simple_j},
    {TheoremId::cor_rt_j_counts, "cor-rt-j-counts", "|RT_{n+1}| = J(3(n+1), n(n+1))", 8, false, false,
     rt_j_counts},
    {TheoremId::thm_rt_simple_t, "thm-rt-simple-t", "P_n(RT) = T(k y1 | k x1; 0 | k(x2+y2+w-x1-y1))", 7, false,
     false, rt_simple_t},
    {TheoremId::cor_rt_counts, "cor-rt-counts", "|RT_n| = T(k | k; 0 | k)", 9, false, false, rt_counts},
    {TheoremId::thm_rt_master_j, "thm-rt-master-j", "Q_{n+1}(RT) = b00 J(sum c+d+f, sum a * sum b)", 7, true,
     false, rt_master_j},
    {TheoremId::thm_rt_master_t, "thm-rt-master-t", "Q_n(RT) = T(sum b | sum a; 0 | sum c+d+f-a-b)", 7, true,
     false, rt_master_t},
    {TheoremId::cor_rt_master_t, "cor-rt-master-t", "Q_n(a,b,a,b,f) = T(sum b | sum a; 0 | sum f)", 7, true, false,
     rt_master_t_folded},
    {TheoremId::thm_rt_master_star, "thm-rt-master-star", "Q*_n = T(mu sum bh | nu sum ah; 0 | sum f)", 7, true,
     false, rt_master_star},
    {TheoremId::thm_irt_simple_t, "thm-irt-simple-t", "P_n(IRT; x,x,y,y) = T(k y | k x; z | k w)", 7, false, false,
     irt_simple_t},
    {TheoremId::cor_irt_counts, "cor-irt-counts", "|IRT_n| = T(k | k; 1 | k)", 8, false, false, irt_counts},
    {TheoremId::thm_irt_simple_new, "thm-irt-simple-new",
     "P_n(IRT; y2 = x1+y1-x2) = T(k y1 | k x1; z | k w), free of x2", 7, false, false, irt_simple_new},
    {TheoremId::thm_irt_master_t, "thm-irt-master-t", "Q_n(IRT) = T(mu sum bh | nu sum ah; e | sum f)", 7, true,
     false, irt_master_t},
    {TheoremId::flajolet_motzkin, "flajolet-motzkin", "labeled Motzkin paths sum to their J-fraction", 7, false,
     false, flajolet_motzkin_check},
    {TheoremId::flajolet_dyck, "flajolet-dyck", "labeled Dyck paths sum to their S-fraction", 5, false, false,
     flajolet_dyck_check},
    {TheoremId::flajolet_schroder, "flajolet-schroder", "labeled Schroder paths sum to their T-fraction", 6, false,
     false, flajolet_schroder_check},
    {TheoremId::eq_ogf_rtt_irtt, "eq-ogf-rtt-irtt", "IRT ogf is the RT ogf after the 1/(1-zt) substitution", 7,
     false, false, rt_to_irt_ogf},
    {TheoremId::thm_perm_master, "thm-perm-master", "P*_n(perm) = Q_n(BT) with the BT master T-fraction", 7, true,
     false, perm_master},
    {TheoremId::cor_perm_pq, "cor-perm-pq", "p^(2-13) q^(31-2) over S_n = S([k]_{p,q})", 7, false, false, perm_pq},
    {TheoremId::prop_perm_equidist, "prop-perm-equidist", "(2-13, 31-2) and (2-31, 31-2) are equidistributed", 8,
     false, false, perm_equidist},
    {TheoremId::prop_croix_nid_translate, "prop-croix-nid-translate",
     "nid and croix of a BT equal 31-2 and 2-13 of its permutation", 7, false, false, croix_nid_translate},
    {TheoremId::prop_grammar_bt, "prop-grammar-bt", "D^(n-1) y1 = P_n(BT)", 7, false, false, grammar_bt},
    {TheoremId::prop_grammar_rt, "prop-grammar-rt", "D^(n-1) y1 = P_n(RT)", 7, false, false, grammar_rt},
}};

const Entry& entry(TheoremId id) {
  const auto& e = kRegistry.at(static_cast<std::size_t>(id));
  if (e.id != id) throw std::logic_error("theorem registry out of order");
  return e;
}

constexpr std::array<TheoremId, kRegistry.size()> kIds = [] {
  std::array<TheoremId, kRegistry.size()> ids{};
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = kRegistry[i].id;
  return ids;
}();

std::vector<OrderCheck> plan(const Entry& e, unsigned order) {
  if (e.randomized) return {{order, Evaluation::randomized}};
  if (!e.master || order <= kSymbolicMasterOrder) return {{order, Evaluation::symbolic}};
  return {{kSymbolicMasterOrder, Evaluation::symbolic}, {order, Evaluation::prime_specialized}};
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kIds; }

std::string_view to_string(TheoremId id) { return entry(id).name; }

std::string_view describe(TheoremId id) { return entry(id).statement; }

unsigned default_order(TheoremId id) { return entry(id).order; }

bool is_master(TheoremId id) { return entry(id).master; }

TheoremId parse_theorem_id(std::string_view name) {
  for (const auto& e : kRegistry) {
    if (e.name == name) return e.id;
  }
  throw UnknownTheorem(fmt::format("unknown theorem id '{}'", name));
}

std::string_view to_string(Evaluation e) {
  switch (e) {
    case Evaluation::symbolic:
      return "symbolic";
    case Evaluation::prime_specialized:
      return "prime-specialized";
    case Evaluation::randomized:
      return "randomized";
  }
  return "?";
}

TheoremReport verify(const VerifySpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const Entry& e = entry(spec.theorem);
  TheoremReport report{spec.theorem, true, plan(e, spec.order.value_or(e.order)), 0, {}};
  std::vector<std::string> details;
  for (const OrderCheck& c : report.checks) {
    const Context ctx{c.order, spec.traversal, Valuation(c.evaluation, spec.specialization), spec.seed,
                      spec.trials};
    CheckReport r;
    try {
      r = e.check(ctx);
    } catch (const std::exception& ex) {
      r = {false, fmt::format("exception: {}", ex.what())};
    }
    details.push_back(fmt::format("[{} N={}] {}", to_string(c.evaluation), c.order, r.detail));
    if (!r.pass) {
      report.pass = false;
      report.detail = details.back();
      break;
    }
  }
  if (report.pass) report.detail = fmt::format("{}", fmt::join(details, "; "));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<TheoremReport> verify_all(std::span<const VerifySpec> specs) {
  std::vector<TheoremReport> out(specs.size());
  tbb::parallel_for(std::size_t{0}, specs.size(), [&](std::size_t i) { out[i] = verify(specs[i]); });
  return out;
}

std::vector<VerifySpec> default_specs(Traversal traversal) {
  std::vector<VerifySpec> specs;
  for (TheoremId id : all_theorems()) {
    VerifySpec s;
    s.theorem = id;
    s.traversal = traversal;
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace tfrac
