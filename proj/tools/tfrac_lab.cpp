// SPDX-License-Identifier: MIT
// tfrac-lab: command-line front end for the tfrac library.

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <tbb/global_control.h>

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfrac/bijections.hpp"
#include "tfrac/continued_fraction.hpp"
#include "tfrac/grammar.hpp"
#include "tfrac/lattice_paths.hpp"
#include "tfrac/oeis.hpp"
#include "tfrac/permutations.hpp"
#include "tfrac/riordan.hpp"
#include "tfrac/spec_json.hpp"
#include "tfrac/theorems.hpp"
#include "tfrac/tree_polynomials.hpp"
#include "tfrac/trees.hpp"

namespace {

using nlohmann::json;
using namespace tfrac;

enum class ExitCode : int { ok = 0, failed = 1, usage = 2 };

/// Thrown for inputs that parse as flags but make no sense together.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string format = "json";
  int jobs = 0;
};

/// Prints JSON, or the plain rendering when --format text was requested.
void emit(const GlobalOptions& g, const json& structured, const std::string& plain) {
  if (g.format == "text") {
    std::cout << plain << '\n';
  } else {
    std::cout << structured.dump(2) << '\n';
  }
}

json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json coefficient_json(const Poly& p) {
  if (p.is_constant()) return integer_json(p.constant_term());
  return p.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::optional<Substitution> optional_substitution(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_substitution(text);
}

// ------------------------------------------------------------------ expand

struct ExpandOptions {
  std::string tfraction, jfraction, sfraction;
  unsigned order = 8;
};

ExitCode run_expand(const GlobalOptions& g, const ExpandOptions& o) {
  const int given = int(!o.tfraction.empty()) + int(!o.jfraction.empty()) + int(!o.sfraction.empty());
  if (given != 1) throw UsageError("expand needs exactly one of --tfraction, --jfraction, --sfraction");
  Series s(o.order);
  std::string kind;
  if (!o.tfraction.empty()) {
    s = expand_t(parse_tfraction(o.tfraction), o.order);
    kind = "T";
  } else if (!o.jfraction.empty()) {
    s = expand_j(parse_jfraction(o.jfraction), o.order);
    kind = "J";
  } else {
    s = expand_s(parse_sfraction(o.sfraction), o.order);
    kind = "S";
  }
  json coeffs = json::array();
  std::vector<std::string> plain;
  for (const Poly& c : s.coeffs()) {
    coeffs.push_back(coefficient_json(c));
    plain.push_back(c.str());
  }
  emit(g, {{"fraction", kind}, {"order", o.order}, {"coefficients", coeffs}}, fmt::format("{}", fmt::join(plain, ",")));
  return ExitCode::ok;
}

// --------------------------------------------------------------- enumerate

struct EnumerateOptions {
  std::string family = "bt";
  int n = 3;
  bool count_only = false;
  std::size_t limit = 10000;
};

ExitCode run_enumerate(const GlobalOptions& g, const EnumerateOptions& o) {
  std::vector<std::string> trees;
  std::uint64_t count = 0;
  auto keep = [&](std::string text) {
    ++count;
    if (!o.count_only && trees.size() < o.limit) trees.push_back(std::move(text));
  };
  if (o.family == "bt" || o.family == "rt") {
    const bool binary = o.family == "bt";
    if (o.count_only) {
      count = binary ? count_binary(o.n) : count_rt(o.n);
    } else {
      for_each_tree(binary ? Family::binary : Family::ternary, o.n, [&](const TreeShape& s) {
        keep(binary ? to_text(BinaryTree{s}) : to_text(RestrictedTernaryTree{s}));
      });
    }
  } else if (o.family == "irt") {
    if (o.count_only) {
      count = count_irt(o.n);
    } else {
      for_each_irt(o.n, [&](const IntervalTree& t) { keep(to_text(t)); });
    }
  } else if (o.family == "multilabeled") {
    for_each_multilabeled(o.n, [&](const MultiLabeledBinaryTree& t) { keep(to_text(t)); });
  } else {
    throw UsageError(fmt::format("unknown family '{}' (bt, rt, irt, multilabeled)", o.family));
  }
  json out{{"family", o.family}, {"n", o.n}, {"count", count}};
  if (!o.count_only) {
    out["trees"] = trees;
    out["truncated"] = trees.size() < count;
  }
  emit(g, out, o.count_only ? std::to_string(count) : fmt::format("{}", fmt::join(trees, "\n")));
  return ExitCode::ok;
}

// ------------------------------------------------------------------- stats

struct TreeOptions {
  std::string family = "bt";
  std::string tree;
  std::string traversal = "preorder";
};

ExitCode run_stats(const GlobalOptions& g, const TreeOptions& o) {
  const Traversal a = parse_traversal(o.traversal);
  std::vector<VertexStats> stats;
  std::vector<std::string> labels;
  Family family = Family::ternary;
  if (o.family == "bt" || o.family == "rt") {
    const TreeShape shape = o.family == "bt" ? parse_binary_tree(o.tree).shape : parse_rt(o.tree).shape;
    family = o.family == "bt" ? Family::binary : Family::ternary;
    stats = vertex_stats(shape, a);
    for (int v = 0; v < shape.size(); ++v) labels.push_back(std::to_string(v + 1));
  } else if (o.family == "irt") {
    const IntervalTree t = parse_irt(o.tree);
    stats = vertex_stats(t, a);
    for (const Interval& i : t.labels) labels.push_back(i.lo == i.hi ? std::to_string(i.lo) : fmt::format("[{},{}]", i.lo, i.hi));
  } else {
    throw UsageError(fmt::format("unknown family '{}' (bt, rt, irt)", o.family));
  }
  json rows = json::array();
  std::string plain = "label\ttype\tlev\tcroix\tnid\tsurplus";
  for (std::size_t v = 0; v < stats.size(); ++v) {
    const VertexStats& s = stats[v];
    const std::string type = s.node_type.str(family);
    rows.push_back({{"label", labels[v]}, {"node_type", type}, {"lev", s.lev}, {"croix", s.croix},
                    {"nid", s.nid}, {"label_surplus", s.label_surplus}});
    plain += fmt::format("\n{}\t{}\t{}\t{}\t{}\t{}", labels[v], type, s.lev, s.croix, s.nid, s.label_surplus);
  }
  emit(g, {{"family", o.family}, {"traversal", to_string(a)}, {"vertices", rows}}, plain);
  return ExitCode::ok;
}

// -------------------------------------------------------------------- poly

struct PolyOptions {
  std::string family = "bt";
  std::string kind = "simple";
  int n = 3;
  std::string traversal = "preorder";
  std::string specialize;
};

ExitCode run_poly(const GlobalOptions& g, const PolyOptions& o) {
  const Traversal a = parse_traversal(o.traversal);
  Poly p;
  const std::string key = o.family + "/" + o.kind;
  if (key == "bt/simple") {
    p = p_bt(o.n);
  } else if (key == "rt/simple") {
    p = p_rt(o.n);
  } else if (key == "irt/simple") {
    p = p_irt(o.n);
  } else if (key == "bt/master") {
    p = q_bt(o.n, a);
  } else if (key == "rt/master") {
    p = q_rt(o.n, a);
  } else if (key == "rt/star") {
    p = q_star_rt(o.n, a);
  } else if (key == "irt/master") {
    p = q_irt(o.n, a);
  } else if (key == "perm/master") {
    p = p_perm_star(o.n);
  } else if (key == "perm/p4") {
    p = p4(o.n);
  } else {
    throw UsageError(fmt::format(
        "unknown family/kind '{}' (bt|rt|irt/simple, bt|rt|irt/master, rt/star, perm/master, perm/p4)", key));
  }
  if (const auto sub = optional_substitution(o.specialize)) p = specialize(p, *sub);
  emit(g, {{"family", o.family}, {"kind", o.kind}, {"n", o.n}, {"traversal", to_string(a)},
           {"terms", p.size()}, {"poly", p.str()}},
       p.str());
  return ExitCode::ok;
}

// --------------------------------------------------------------- bijection

struct BijectionOptions {
  std::string kind = "motzkin";
  std::string tree;
  std::string path;
  std::string labels;
  std::string permutation;
  std::string traversal = "preorder";
};

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  const json j = json::parse(text);
  for (const auto& item : j) {
    if (item.is_array() && item.size() == 2) {
      out.push_back({item[0].get<int>(), item[1].get<int>()});
    } else {
      out.push_back({0, item.get<int>()});
    }
  }
  return out;
}

json path_json(const LabeledPath& lp) {
  json labels = json::array();
  for (const Label& l : lp.labels) labels.push_back(l.str());
  return {{"path", lp.path.str()}, {"labels", labels}, {"render", render(lp.path)}};
}

ExitCode run_bijection(const GlobalOptions& g, const BijectionOptions& o) {
  const Traversal a = parse_traversal(o.traversal);
  if (o.kind == "permutation") {
    if (!o.tree.empty()) {
      const Permutation sigma = bt_to_permutation(parse_binary_tree(o.tree));
      emit(g, {{"tree", o.tree}, {"permutation", sigma.str()}}, sigma.str());
    } else if (!o.permutation.empty()) {
      const std::string tree = to_text(permutation_to_bt(Permutation::parse(o.permutation)));
      emit(g, {{"permutation", o.permutation}, {"tree", tree}}, tree);
    } else {
      throw UsageError("bijection --kind permutation needs --tree or --permutation");
    }
    return ExitCode::ok;
  }
  if (o.kind != "motzkin" && o.kind != "schroder") {
    throw UsageError(fmt::format("unknown bijection '{}' (motzkin, schroder, permutation)", o.kind));
  }
  const bool motzkin = o.kind == "motzkin";
  if (!o.tree.empty()) {
    const LabeledPath lp = motzkin ? rt_to_labeled_motzkin(parse_rt(o.tree), a)
                                   : irt_to_labeled_schroder(parse_irt(o.tree), a);
    json out = path_json(lp);
    out["tree"] = o.tree;
    out["traversal"] = to_string(a);
    emit(g, out, fmt::format("{}\n{}", lp.path.str(), render(lp.path)));
  } else if (!o.path.empty()) {
    const PathKind kind = motzkin ? PathKind::motzkin : PathKind::schroder;
    LabeledPath lp{Path::parse(kind, o.path), {}};
    lp.labels = o.labels.empty() ? std::vector<Label>(lp.path.steps.size()) : parse_labels(o.labels);
    const std::string tree = motzkin ? to_text(labeled_motzkin_to_rt(lp, a)) : to_text(labeled_schroder_to_irt(lp, a));
    emit(g, {{"path", o.path}, {"traversal", to_string(a)}, {"tree", tree}}, tree);
  } else {
    throw UsageError("bijection needs --tree or --path");
  }
  return ExitCode::ok;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
  bool all = false;
  std::vector<std::string> ids;
  unsigned order = 0;
  std::string traversal = "preorder";
  std::string specialize;
  std::uint64_t seed = VerifySpec{}.seed;
  unsigned trials = VerifySpec{}.trials;
};

ExitCode run_verify(const GlobalOptions& g, const VerifyOptions& o) {
  if (o.all == !o.ids.empty()) throw UsageError("verify needs exactly one of --all or --id");
  std::vector<VerifySpec> specs;
  const auto add = [&](TheoremId id) {
    VerifySpec s;
    s.theorem = id;
    if (o.order > 0) s.order = o.order;
    s.traversal = parse_traversal(o.traversal);
    s.specialization = optional_substitution(o.specialize);
    s.seed = o.seed;
    s.trials = o.trials;
    specs.push_back(std::move(s));
  };
  if (o.all) {
    for (TheoremId id : all_theorems()) add(id);
  } else {
    for (const auto& name : o.ids) add(parse_theorem_id(name));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto reports = verify_all(specs);
  bool pass = true;
  json results = json::array();
  std::string plain;
  for (const auto& r : reports) {
    pass = pass && r.pass;
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"order", c.order}, {"evaluation", to_string(c.evaluation)}});
    results.push_back({{"id", to_string(r.theorem)}, {"pass", r.pass}, {"checks", checks},
                       {"seconds", r.seconds}, {"detail", r.detail}});
    plain += fmt::format("{} {:<26} {:8.2f}s  {}\n", r.pass ? "PASS" : "FAIL", to_string(r.theorem), r.seconds,
                         r.detail);
  }
  plain += pass ? "all passed" : "FAILURES";
  emit(g, {{"pass", pass}, {"seconds", seconds_since(start)}, {"results", results}}, plain);
  return pass ? ExitCode::ok : ExitCode::failed;
}

// -------------------------------------------------------------- conjecture

struct ConjectureOptions {
  int nmax = 9;
  bool stabilizer = false;
};

ExitCode run_conjecture(const GlobalOptions& g, const ConjectureOptions& o) {
  bool pass = true;
  json rows = json::array();
  std::string plain;
  for (int n = 1; n <= o.nmax; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const Poly poly = p4(n);
    const CheckReport relations = check_trivariate_conjecture(poly);
    // Small n have accidental extra symmetries, so the stabilizer bound starts at 5.
    const CheckReport symmetry = check_z2z2_symmetry(poly, o.stabilizer && n >= 5);
    const double secs = seconds_since(start);
    const bool ok = relations.pass && symmetry.pass;
    pass = pass && ok;
    rows.push_back({{"n", n}, {"pass", ok}, {"conjecture", relations.detail}, {"symmetry", symmetry.detail},
                    {"seconds", secs}});
    plain += fmt::format("n={} {} {:.2f}s  {}; {}\n", n, ok ? "PASS" : "FAIL", secs, relations.detail, symmetry.detail);
  }
  emit(g, {{"pass", pass}, {"results", rows}}, plain + (pass ? "all passed" : "FAILURES"));
  return pass ? ExitCode::ok : ExitCode::failed;
}

// -------------------------------------------------------------------- oeis

struct OeisOptions {
  std::string action = "table";
  std::string which = "second";
  bool offline = false;
  bool lookup = false;
  std::vector<long> terms;
  unsigned drop_first = 0;
};

SweepConfig sweep_config(const std::string& which) {
  if (which == "first") return SweepConfig::first();
  if (which == "second") return SweepConfig::second();
  throw UsageError(fmt::format("unknown sweep '{}' (first, second)", which));
}

json terms_json(const std::vector<mpz_class>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(integer_json(t));
  return out;
}

ExitCode run_oeis(const GlobalOptions& g, const OeisOptions& o) {
  OeisClient client(OeisClientOptions::from_environment(o.offline));
  if (o.action == "lookup") {
    if (o.terms.empty()) throw UsageError("oeis lookup needs --terms");
    std::vector<mpz_class> terms(o.terms.begin(), o.terms.end());
    const auto numbers = client.lookup(terms, o.drop_first);
    emit(g, {{"terms", terms_json(terms)}, {"matches", numbers}}, fmt::format("{}", fmt::join(numbers, ",")));
    return ExitCode::ok;
  }
  const SweepConfig config = sweep_config(o.which);
  if (o.action == "table") {
    const auto& rows = o.which == "first" ? first_sweep_matches() : second_sweep_matches();
    const CheckReport r = reproduce_table(rows, config, client);
    json table = json::array();
    for (const auto& row : rows) {
      table.push_back({{"a_number", row.a_number}, {"params", to_string(row.params)}, {"first_terms", row.first_terms}});
    }
    emit(g, {{"sweep", o.which}, {"pass", r.pass}, {"detail", r.detail}, {"rows", table}},
         fmt::format("{} {}", r.pass ? "PASS" : "FAIL", r.detail));
    return r.pass ? ExitCode::ok : ExitCode::failed;
  }
  if (o.action != "sweep") throw UsageError(fmt::format("unknown oeis action '{}' (sweep, table, lookup)", o.action));
  json rows = json::array();
  std::string plain;
  if (o.lookup) {
    for (const auto& m : sweep_matches(config, client)) {
      rows.push_back({{"params", to_string(m.params)}, {"terms", terms_json(m.terms)}, {"matches", m.a_numbers}});
      plain += fmt::format("{} {}\n", to_string(m.params), fmt::join(m.a_numbers, ","));
    }
  } else {
    for (const auto& e : sweep(config)) {
      rows.push_back({{"params", to_string(e.params)}, {"terms", terms_json(e.terms)}});
      std::vector<std::string> t;
      for (const auto& v : e.terms) t.push_back(v.get_str());
      plain += fmt::format("{} {}\n", to_string(e.params), fmt::join(t, ","));
    }
  }
  emit(g, {{"sweep", o.which}, {"size", sweep_tuples(config).size()}, {"rows", rows}}, plain);
  return ExitCode::ok;
}

// ----------------------------------------------------------------- riordan

struct RiordanOptions {
  std::string family = "rt";
  std::size_t size = 6;
  std::string matrix = "production";
  bool ones = false;
  bool check = false;
};

SimpleFamily simple_family(const std::string& name) {
  if (name == "bt") return SimpleFamily::bt;
  if (name == "rt") return SimpleFamily::rt;
  throw UsageError(fmt::format("unknown family '{}' (bt, rt)", name));
}

ExitCode run_riordan(const GlobalOptions& g, const RiordanOptions& o) {
  const SimpleFamily family = simple_family(o.family);
  if (o.check) {
    const CheckReport r = check_production_route(family, o.size);
    emit(g, {{"family", o.family}, {"size", o.size}, {"pass", r.pass}, {"detail", r.detail}},
         fmt::format("{} {}", r.pass ? "PASS" : "FAIL", r.detail));
    return r.pass ? ExitCode::ok : ExitCode::failed;
  }
  const SimpleWeights weights = o.ones ? SimpleWeights::ones() : SimpleWeights{};
  const PolyMatrix production = lah_production(simple_phi(family, weights), o.size);
  PolyMatrix shown = production;
  if (o.matrix == "output") {
    shown = output_matrix(production, o.size);
  } else if (o.matrix != "production") {
    throw UsageError(fmt::format("unknown matrix '{}' (production, output)", o.matrix));
  }
  // Matrices are tabular, so CSV is the natural plain form; JSON nests the rows.
  json rows = json::array();
  for (std::size_t i = 0; i < shown.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < shown.size(); ++j) row.push_back(coefficient_json(shown(i, j)));
    rows.push_back(row);
  }
  emit(g, {{"family", o.family}, {"matrix", o.matrix}, {"rows", rows}}, to_csv(shown));
  return ExitCode::ok;
}

// ----------------------------------------------------------------- grammar

struct GrammarOptions {
  std::string action = "iterate";
  std::string family = "rt";
  unsigned n = 1;
  bool ones = false;
};

ExitCode run_grammar(const GlobalOptions& g, const GrammarOptions& o) {
  const DerivativeOperator d = o.family == "dumont" ? dumont_operator() : tree_operator(simple_family(o.family));
  if (o.action == "rules") {
    emit(g, {{"family", o.family}, {"rules", d.str()}}, d.str());
    return ExitCode::ok;
  }
  if (o.action != "iterate") throw UsageError(fmt::format("unknown grammar action '{}' (iterate, rules)", o.action));
  if (o.n < 1) throw UsageError("grammar iterate needs --n >= 1");
  const Poly seed = o.family == "dumont" ? Poly::symbol("x") : Poly::symbol("y1");
  Poly p = d.iterate(seed, o.n - 1);
  if (o.ones) p = specialize(p, SymbolResolver([](const IndexedSymbol&) { return std::optional<Poly>(1); }));
  emit(g, {{"family", o.family}, {"n", o.n}, {"ones", o.ones}, {"poly", p.str()}}, p.str());
  return ExitCode::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tfrac-lab: continued fractions, increasing trees and their statistics"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Worker thread cap (0 = all cores)")->check(CLI::NonNegativeNumber);

  std::function<ExitCode()> action;

  ExpandOptions expand;
  auto* c_expand = app.add_subcommand("expand", "Taylor coefficients of a continued fraction");
  c_expand->add_option("--tfraction", expand.tfraction, "quasiaffine:x,y,u,v,a,b,c,d or JSON {alpha, delta}");
  c_expand->add_option("--jfraction", expand.jfraction, "JSON {gamma, beta}");
  c_expand->add_option("--sfraction", expand.sfraction, "JSON {alpha}");
  c_expand->add_option("--order", expand.order, "Highest power of t");
  c_expand->callback([&] { action = [&] { return run_expand(g, expand); }; });

  EnumerateOptions enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "List or count the trees of a family");
  c_enum->add_option("--family", enumerate.family, "bt, rt, irt or multilabeled");
  c_enum->add_option("--n", enumerate.n, "Size (largest label)")->required()->check(CLI::Range(0, 12));
  c_enum->add_flag("--count", enumerate.count_only, "Only print the count");
  c_enum->add_option("--limit", enumerate.limit, "Most trees to list");
  c_enum->callback([&] { action = [&] { return run_enumerate(g, enumerate); }; });

  TreeOptions stats;
  auto* c_stats = app.add_subcommand("stats", "Per-vertex statistics of one tree");
  c_stats->add_option("--family", stats.family, "bt, rt or irt");
  c_stats->add_option("--tree", stats.tree, "Tree in text form, e.g. 1(2,3)")->required();
  c_stats->add_option("--traversal", stats.traversal, "preorder, postorder, inorder or lrmr");
  c_stats->callback([&] { action = [&] { return run_stats(g, stats); }; });

  PolyOptions poly;
  auto* c_poly = app.add_subcommand("poly", "Generating polynomial of a family");
  c_poly->add_option("--family", poly.family, "bt, rt, irt or perm");
  c_poly->add_option("--kind", poly.kind, "simple, master, star or p4");
  c_poly->add_option("--n", poly.n, "Size")->required()->check(CLI::Range(0, 10));
  c_poly->add_option("--traversal", poly.traversal, "Traversal for crossing/nesting statistics");
  c_poly->add_option("--specialize", poly.specialize, "JSON map from symbols to values");
  c_poly->callback([&] { action = [&] { return run_poly(g, poly); }; });

  BijectionOptions bij;
  auto* c_bij = app.add_subcommand("bijection", "Trees to labeled paths or permutations and back");
  c_bij->add_option("--kind", bij.kind, "motzkin, schroder or permutation");
  c_bij->add_option("--tree", bij.tree, "Tree in text form");
  c_bij->add_option("--path", bij.path, "Path word in U, D, L");
  c_bij->add_option("--labels", bij.labels, "JSON step labels, integers or [kind, value] pairs");
  c_bij->add_option("--permutation", bij.permutation, "One-line permutation");
  c_bij->add_option("--traversal", bij.traversal, "preorder, postorder or lrmr");
  c_bij->callback([&] { action = [&] { return run_bijection(g, bij); }; });

  VerifyOptions verify_opts;
  auto* c_verify = app.add_subcommand("verify", "Check continued-fraction identities");
  c_verify->add_flag("--all", verify_opts.all, "Every registered identity");
  c_verify->add_option("--id", verify_opts.ids, "Identity name (repeatable)");
  c_verify->add_option("--order", verify_opts.order, "Order N (default per identity)");
  c_verify->add_option("--traversal", verify_opts.traversal, "preorder, postorder or lrmr");
  c_verify->add_option("--specialize", verify_opts.specialize, "JSON map applied to both sides");
  c_verify->add_option("--seed", verify_opts.seed, "Seed for randomized identities");
  c_verify->add_option("--trials", verify_opts.trials, "Random specs per randomized identity");
  c_verify->callback([&] { action = [&] { return run_verify(g, verify_opts); }; });

  ConjectureOptions conj;
  auto* c_conj = app.add_subcommand("conjecture", "Symmetry relations of the four-pattern polynomial");
  c_conj->add_option("--nmax", conj.nmax, "Largest n")->check(CLI::Range(1, 11));
  c_conj->add_flag("--stabilizer", conj.stabilizer,
                   "For n >= 5 also check that no other variable permutation fixes it");
  c_conj->callback([&] { action = [&] { return run_conjecture(g, conj); }; });

  OeisOptions oeis;
  auto* c_oeis = app.add_subcommand("oeis", "Quasi-affine sweeps and OEIS lookups");
  c_oeis->add_option("action", oeis.action, "sweep, table or lookup");
  c_oeis->add_option("--which", oeis.which, "first or second sweep");
  c_oeis->add_flag("--offline", oeis.offline, "Answer from the cache and bundled fixtures only");
  c_oeis->add_flag("--lookup", oeis.lookup, "Look every sweep sequence up");
  c_oeis->add_option("--terms", oeis.terms, "Terms for lookup")->delimiter(',');
  c_oeis->add_option("--drop-first", oeis.drop_first, "Leading terms dropped before lookup");
  c_oeis->callback([&] { action = [&] { return run_oeis(g, oeis); }; });

  RiordanOptions riordan;
  auto* c_riordan = app.add_subcommand("riordan", "Production and output matrices of the simple families");
  c_riordan->add_option("--family", riordan.family, "bt or rt");
  c_riordan->add_option("--size", riordan.size, "Matrix size")->check(CLI::Range(1, 16));
  c_riordan->add_option("--matrix", riordan.matrix, "production or output");
  c_riordan->add_flag("--ones", riordan.ones, "Set every weight to 1");
  c_riordan->add_flag("--check", riordan.check, "Compare the output matrix with the tree polynomials");
  c_riordan->callback([&] { action = [&] { return run_riordan(g, riordan); }; });

  GrammarOptions grammar;
  auto* c_grammar = app.add_subcommand("grammar", "Derivative operators");
  c_grammar->add_option("action", grammar.action, "iterate or rules");
  c_grammar->add_option("--family", grammar.family, "bt, rt or dumont");
  c_grammar->add_option("--n", grammar.n, "Returns D^(n-1) applied to the seed");
  c_grammar->add_flag("--ones", grammar.ones, "Evaluate at all variables = 1");
  c_grammar->callback([&] { action = [&] { return run_grammar(g, grammar); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  std::unique_ptr<tbb::global_control> threads;
  if (g.jobs > 0) {
    threads = std::make_unique<tbb::global_control>(tbb::global_control::max_allowed_parallelism,
                                                    static_cast<std::size_t>(g.jobs));
  }
  try {
    return static_cast<int>(action());
  } catch (const std::invalid_argument& e) {
    std::cerr << "tfrac-lab: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const ParseError& e) {
    std::cerr << "tfrac-lab: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "tfrac-lab: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    std::cerr << "tfrac-lab: " << e.what() << '\n';
    return static_cast<int>(ExitCode::failed);
  }
}
