// SPDX-License-Identifier: MIT
#include "tfrac/lattice_paths.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace tfrac {

std::string_view to_string(PathKind k) {
  switch (k) {
    case PathKind::motzkin:
      return "motzkin";
    case PathKind::dyck:
      return "dyck";
    case PathKind::schroder:
      return "schroder";
  }
  return "?";
}

PathKind parse_path_kind(std::string_view name) {
  for (PathKind k : {PathKind::motzkin, PathKind::dyck, PathKind::schroder}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument(fmt::format("unknown path kind '{}' (motzkin|dyck|schroder)", name));
}

namespace {

int delta(Step s) { return s == Step::rise ? 1 : s == Step::fall ? -1 : 0; }

int width(PathKind k, Step s) { return (k == PathKind::schroder && s == Step::level) ? 2 : 1; }

char letter(Step s) { return s == Step::rise ? 'U' : s == Step::fall ? 'D' : 'L'; }

}  // namespace

std::vector<int> Path::heights() const {
  std::vector<int> h{0};
  h.reserve(steps.size() + 1);
  for (Step s : steps) h.push_back(h.back() + delta(s));
  return h;
}

int Path::length() const {
  int len = 0;
  for (Step s : steps) len += width(kind, s);
  return len;
}

std::string Path::str() const {
  std::string out;
  for (Step s : steps) out += letter(s);
  return out;
}

Path Path::parse(PathKind kind, std::string_view word) {
  Path p{kind, {}};
  for (char ch : word) {
    switch (ch) {
      case 'U':
      case 'u':
        p.steps.push_back(Step::rise);
        break;
      case 'D':
      case 'd':
        p.steps.push_back(Step::fall);
        break;
      case 'L':
      case 'l':
        p.steps.push_back(Step::level);
        break;
      case ' ':
        break;
      default:
        throw InvalidPath(fmt::format("bad step letter '{}' (U, D, L)", ch));
    }
  }
  validate(p);
  return p;
}

void validate(const Path& p) {
  int h = 0;
  for (Step s : p.steps) {
    if (p.kind == PathKind::dyck && s == Step::level) throw InvalidPath("Dyck paths have no level steps");
    h += delta(s);
    if (h < 0) throw InvalidPath(fmt::format("path {} goes below the axis", p.str()));
  }
  if (h != 0) throw InvalidPath(fmt::format("path {} ends at height {}", p.str(), h));
}

std::string Label::str() const {
  return kind == 0 ? std::to_string(value) : fmt::format("({},{})", kind, value);
}

namespace {

std::vector<Label> range_labels(int kind, int hi) {
  std::vector<Label> out;
  for (int v = 0; v <= hi; ++v) out.push_back({kind, v});
  return out;
}

}  // namespace

LabelSets LabelSets::unit() {
  return {[](Step, int) { return std::vector<Label>{Label{}}; }};
}

LabelSets LabelSets::restricted_ternary() {
  return {[](Step s, int h) {
    if (s != Step::level) return range_labels(0, h);
    std::vector<Label> out;
    for (int type = 1; type <= 3; ++type) {
      auto part = range_labels(type, h);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }};
}

LabelSets LabelSets::interval_ternary() {
  return {[](Step, int h) { return range_labels(0, h % 2 == 1 ? h / 2 : 0); }};
}

void validate(const LabeledPath& lp, const LabelSets& sets) {
  validate(lp.path);
  if (lp.labels.size() != lp.path.steps.size()) throw InvalidPath("one label per step is required");
  const auto h = lp.path.heights();
  for (std::size_t i = 0; i < lp.labels.size(); ++i) {
    const auto allowed = sets.labels(lp.path.steps[i], h[i]);
    if (std::find(allowed.begin(), allowed.end(), lp.labels[i]) == allowed.end()) {
      throw InvalidPath(fmt::format("label {} of step {} is not admissible at height {}", lp.labels[i].str(),
                                    i + 1, h[i]));
    }
  }
}

void for_each_path(PathKind kind, int length, const std::function<void(const Path&)>& visit) {
  Path p{kind, {}};
  std::function<void(int, int)> extend = [&](int x, int h) {
    if (x == length) {
      if (h == 0) visit(p);
      return;
    }
    const int remaining = length - x;
    for (Step s : {Step::rise, Step::level, Step::fall}) {
      if (s == Step::level && kind == PathKind::dyck) continue;
      const int w = width(kind, s);
      const int next = h + delta(s);
      if (w > remaining || next < 0 || next > remaining - w) continue;
      p.steps.push_back(s);
      extend(x + w, next);
      p.steps.pop_back();
    }
  };
  extend(0, 0);
}

std::vector<Path> enumerate_paths(PathKind kind, int length) {
  std::vector<Path> out;
  for_each_path(kind, length, [&](const Path& p) { out.push_back(p); });
  return out;
}

std::vector<LabelSequence> enumerate_labelings(const Path& p, const LabelSets& sets) {
  const auto h = p.heights();
  std::vector<LabelSequence> out{LabelSequence{}};
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto allowed = sets.labels(p.steps[i], h[i]);
    std::vector<LabelSequence> next;
    next.reserve(out.size() * allowed.size());
    for (const auto& prefix : out) {
      for (const auto& l : allowed) {
        next.push_back(prefix);
        next.back().push_back(l);
      }
    }
    out = std::move(next);
  }
  return out;
}

Poly path_weight(const LabeledPath& lp, const StepWeights& weights) {
  const auto h = lp.path.heights();
  Poly w = 1;
  for (std::size_t i = 0; i < lp.path.steps.size(); ++i) w *= weights(lp.path.steps[i], h[i], lp.labels[i]);
  return w;
}

Poly summed_weight(Step s, int height, const StepWeights& weights, const LabelSets& sets) {
  Poly sum;
  for (const auto& l : sets.labels(s, height)) sum += weights(s, height, l);
  return sum;
}

Poly flajolet_sum(PathKind kind, int length, const StepWeights& weights, const LabelSets& sets) {
  if (length < 0) throw std::invalid_argument("negative path length");
  const int max_h = length / 2 + 1;
  // table[x][h]: weighted count of prefixes ending at (x, h).
  std::vector<std::vector<Poly>> table(length + 1, std::vector<Poly>(max_h + 1));
  table[0][0] = 1;
  for (int x = 0; x < length; ++x) {
    for (int h = 0; h <= max_h; ++h) {
      if (table[x][h].is_zero()) continue;
      for (Step s : {Step::rise, Step::fall, Step::level}) {
        if (s == Step::level && kind == PathKind::dyck) continue;
        const int nx = x + width(kind, s);
        const int nh = h + delta(s);
        if (nx > length || nh < 0 || nh > max_h) continue;
        const Poly w = summed_weight(s, h, weights, sets);
        if (!w.is_zero()) table[nx][nh] += table[x][h] * w;
      }
    }
  }
  return table[length][0];
}

Poly flajolet_sum_bruteforce(PathKind kind, int length, const StepWeights& weights, const LabelSets& sets) {
  PolyAccumulator acc;
  for_each_path(kind, length, [&](const Path& p) {
    for (auto& labels : enumerate_labelings(p, sets)) acc.add(path_weight({p, std::move(labels)}, weights));
  });
  return acc.to_poly();
}

JFractionSpec motzkin_fraction(const StepWeights& weights, const LabelSets& sets) {
  auto gamma = [weights, sets](unsigned h) { return summed_weight(Step::level, static_cast<int>(h), weights, sets); };
  auto beta = [weights, sets](unsigned h) {
    return summed_weight(Step::rise, static_cast<int>(h) - 1, weights, sets) *
           summed_weight(Step::fall, static_cast<int>(h), weights, sets);
  };
  return {CoeffSeq::rule(gamma, "level sums"), CoeffSeq::rule(beta, "rise-fall products")};
}

SFractionSpec dyck_fraction(const StepWeights& weights, const LabelSets& sets) {
  return {motzkin_fraction(weights, sets).beta};
}

TFractionSpec schroder_fraction(const StepWeights& weights, const LabelSets& sets) {
  auto delta_rule = [weights, sets](unsigned i) {
    return summed_weight(Step::level, static_cast<int>(i) - 1, weights, sets);
  };
  return {motzkin_fraction(weights, sets).beta, CoeffSeq::rule(delta_rule, "long level sums")};
}

StepWeights schroder_weights(const TFractionSpec& spec) {
  return [spec](Step s, int h, const Label&) -> Poly {
    switch (s) {
      case Step::rise:
        return 1;
      case Step::fall:
        return spec.alpha(static_cast<unsigned>(h));
      case Step::level:
        return spec.delta(static_cast<unsigned>(h + 1));
    }
    return 0;
  };
}

StepWeights schroder_weights_alternative(const TFractionSpec& spec) {
  return [spec](Step s, int h, const Label&) -> Poly {
    if (s == Step::level) return spec.delta(static_cast<unsigned>(h + 1));
    if (h % 2 == 0) return 1;
    // h = 2k - 1: rises carry alpha_{2k}, falls alpha_{2k-1}.
    return spec.alpha(static_cast<unsigned>(s == Step::rise ? h + 1 : h));
  };
}

std::string render(const Path& p) {
  const auto h = p.heights();
  const int top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  const int cols = p.length();
  std::vector<std::string> rows(static_cast<std::size_t>(top + 1), std::string(static_cast<std::size_t>(cols), ' '));
  int x = 0;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step s = p.steps[i];
    if (s == Step::rise) {
      rows[static_cast<std::size_t>(top - h[i])][static_cast<std::size_t>(x)] = '/';
    } else if (s == Step::fall) {
      rows[static_cast<std::size_t>(top - h[i] + 1)][static_cast<std::size_t>(x)] = '\\';
    } else {
      for (int k = 0; k < width(p.kind, s); ++k) {
        rows[static_cast<std::size_t>(top - h[i])][static_cast<std::size_t>(x + k)] = '_';
      }
    }
    x += width(p.kind, s);
  }
  std::string out;
  for (const auto& r : rows) {
    out += r.substr(0, r.find_last_not_of(' ') + 1);
    out += '\n';
  }
  return out;
}

}  // namespace tfrac
