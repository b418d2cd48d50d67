// SPDX-License-Identifier: MIT
#include "tfrac/bijections.hpp"

#include "tfrac/tree_polynomials.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <utility>

namespace tfrac {

namespace {

constexpr NodeType kRise{true, false, true};
constexpr NodeType kFall{false, false, false};
constexpr NodeType kLeftOnly{true, false, false};
constexpr NodeType kMiddleOnly{false, true, false};
constexpr NodeType kRightOnly{false, false, true};

/// Level-step type 1, 2, 3 for node types 100, 010, 001.
int level_type(NodeType t) {
  if (t == kLeftOnly) return 1;
  if (t == kMiddleOnly) return 2;
  if (t == kRightOnly) return 3;
  return 0;
}

NodeType node_type_of_level(int type) {
  switch (type) {
    case 1:
      return kLeftOnly;
    case 2:
      return kMiddleOnly;
    case 3:
      return kRightOnly;
    default:
      throw LabelOutOfRange(fmt::format("level step type {} is not 1, 2 or 3", type));
  }
}

void require_admissible(const LabeledPath& lp, PathKind kind, const LabelSets& sets) {
  if (lp.path.kind != kind) {
    throw InvalidPath(fmt::format("expected a {} path, got {}", to_string(kind), to_string(lp.path.kind)));
  }
  validate(lp.path);
  if (lp.labels.size() != lp.path.steps.size()) throw InvalidPath("one label per step is required");
  const auto h = lp.path.heights();
  for (std::size_t i = 0; i < lp.labels.size(); ++i) {
    const auto allowed = sets.labels(lp.path.steps[i], h[i]);
    if (std::find(allowed.begin(), allowed.end(), lp.labels[i]) == allowed.end()) {
      throw LabelOutOfRange(fmt::format("label {} of step {} is not admissible at height {}",
                                        lp.labels[i].str(), i + 1, h[i]));
    }
  }
}

/// Keeps the first failure; sums of checked objects are tracked separately.
struct Tally {
  CheckReport report;
  std::uint64_t checked = 0;
};

Tally merge(Tally a, Tally b) {
  if (a.report.pass && !b.report.pass) a.report = std::move(b.report);
  a.checked += b.checked;
  return a;
}

CheckReport finish(Tally t, std::string_view what) {
  if (t.report.pass) t.report.detail = fmt::format("{} {} checked", t.checked, what);
  return t.report;
}

}  // namespace

// ------------------------------------------------------------ slotted trees

SlottedTree::SlottedTree() {
  shape_.add_root();
  fill_index_.push_back(-1);
}

void SlottedTree::fill(int rank, NodeType type, Traversal a) {
  if (rank < 0 || rank >= open_) {
    throw LabelOutOfRange(fmt::format("slot rank {} but only {} placeholders are open", rank, open_));
  }
  int target = TreeShape::kNone;
  int seen = 0;
  for (int v : traversal_order(shape_, a)) {
    if (fill_index_[static_cast<std::size_t>(v)] >= 0) continue;
    if (seen++ == rank) {
      target = v;
      break;
    }
  }
  fill_index_[static_cast<std::size_t>(target)] = filled_++;
  --open_;
  const std::array<bool, 3> wanted{type.left, type.middle, type.right};
  for (Slot s : kSlots) {
    if (!wanted[static_cast<std::size_t>(s)]) continue;
    shape_.add_child(target, s);
    fill_index_.push_back(-1);
    ++open_;
  }
}

TreeShape SlottedTree::tree() const {
  if (open_ != 0) throw std::logic_error(fmt::format("slotted tree still has {} open placeholders", open_));
  std::vector<int> by_fill(static_cast<std::size_t>(filled_));
  for (int v = 0; v < shape_.size(); ++v) by_fill[static_cast<std::size_t>(fill_index_[static_cast<std::size_t>(v)])] = v;
  TreeShape out;
  if (filled_ == 0) return out;
  out.add_root();
  for (int k = 1; k < filled_; ++k) {
    const int v = by_fill[static_cast<std::size_t>(k)];
    const int parent = fill_index_[static_cast<std::size_t>(shape_.parent(v))];
    out.add_child(parent, shape_.slot(v));
  }
  return out;
}

// ------------------------------------------------------------ Motzkin

LabeledPath rt_to_labeled_motzkin(const RestrictedTernaryTree& t, Traversal a) {
  validate(t);
  LabeledPath out{Path{PathKind::motzkin, {}}, {}};
  const auto stats = vertex_stats(t.shape, a);
  // The last vertex is a leaf and gets no step.
  for (std::size_t i = 0; i + 1 < stats.size(); ++i) {
    const NodeType type = stats[i].node_type;
    const int nid = stats[i].nid;
    if (type == kRise) {
      out.path.steps.push_back(Step::rise);
      out.labels.push_back({0, nid});
    } else if (type == kFall) {
      out.path.steps.push_back(Step::fall);
      out.labels.push_back({0, nid});
    } else {
      out.path.steps.push_back(Step::level);
      out.labels.push_back({level_type(type), nid});
    }
  }
  return out;
}

RestrictedTernaryTree labeled_motzkin_to_rt(const LabeledPath& lp, Traversal a) {
  require_admissible(lp, PathKind::motzkin, LabelSets::restricted_ternary());
  SlottedTree slotted;
  for (std::size_t i = 0; i < lp.path.steps.size(); ++i) {
    const Label& label = lp.labels[i];
    switch (lp.path.steps[i]) {
      case Step::rise:
        slotted.fill(label.value, kRise, a);
        break;
      case Step::fall:
        slotted.fill(label.value, kFall, a);
        break;
      case Step::level:
        slotted.fill(label.value, node_type_of_level(label.kind), a);
        break;
    }
  }
  slotted.fill(0, kFall, a);
  return RestrictedTernaryTree{slotted.tree()};
}

StepWeights motzkin_master_weights() {
  return [](Step s, int h, const Label& l) -> Poly {
    const int croix = h - l.value;
    if (croix < 0 || l.value < 0) throw LabelOutOfRange(fmt::format("label {} exceeds height {}", l.str(), h));
    const auto i = static_cast<unsigned>(croix);
    const auto j = static_cast<unsigned>(l.value);
    switch (s) {
      case Step::rise:
        return Poly::symbol("a", i, j);
      case Step::fall:
        return Poly::symbol("b", i, j);
      case Step::level:
        switch (l.kind) {
          case 1:
            return Poly::symbol("c", i, j);
          case 2:
            return Poly::symbol("f", i, j);
          case 3:
            return Poly::symbol("d", i, j);
          default:
            break;
        }
    }
    throw LabelOutOfRange(fmt::format("level label {} has no type", l.str()));
  };
}

// ------------------------------------------------------------ Schroder

LabeledPath irt_to_labeled_schroder(const IntervalTree& t, Traversal a) {
  validate(t);
  LabeledPath out{Path{PathKind::schroder, {}}, {}};
  auto push = [&](Step s, int label = 0) {
    out.path.steps.push_back(s);
    out.labels.push_back({0, label});
  };
  auto levels = [&](int count) {
    for (int k = 0; k < count; ++k) push(Step::level);
  };
  if (t.trivial()) {
    levels(t.max_label());
    return out;
  }
  const auto stats = vertex_stats(t, a);
  const std::size_t last = stats.size() - 1;
  for (std::size_t v = 0; v < stats.size(); ++v) {
    const int surplus = stats[v].label_surplus;
    const int nid = stats[v].nid;
    const NodeType type = stats[v].node_type;
    if (v == 0) {
      levels(surplus);
      push(Step::rise);
    } else if (v == last) {
      push(Step::fall, nid);
      levels(surplus);
    } else if (type == kMiddleOnly) {
      push(Step::level, nid);
    } else {
      push(type.left ? Step::rise : Step::fall, nid);
      levels(surplus);
      push(type.right ? Step::rise : Step::fall);
    }
  }
  return out;
}

std::vector<Segment> schroder_segments(const Path& p) {
  std::vector<Segment> out;
  const auto h = p.heights();
  Segment current;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] == Step::level && h[i] % 2 == 0) ++current.leven;
    if (h[i + 1] % 2 != 0) {
      current.end = i + 1;
      out.push_back(current);
      current = Segment{i + 1, i + 1, 0};
    }
  }
  current.end = p.steps.size();
  out.push_back(current);
  return out;
}

IntervalTree labeled_schroder_to_irt(const LabeledPath& lp, Traversal a) {
  require_admissible(lp, PathKind::schroder, LabelSets::interval_ternary());
  const Path& p = lp.path;
  const auto segments = schroder_segments(p);
  if (segments.size() == 1) {
    // No rise: n long levels at height 0.
    return IntervalTree{TreeShape::single_vertex(), {Interval{0, static_cast<int>(p.steps.size())}}};
  }
  if (segments.front().end == segments.front().begin || segments.back().end == segments.back().begin) {
    throw MalformedSegmentation("empty first or last segment");
  }

  SlottedTree slotted;
  std::vector<Interval> labels;
  int next_label = 0;
  auto take_labels = [&](const Segment& seg) {
    labels.push_back({next_label, next_label + seg.leven});
    next_label += seg.leven + 1;
  };

  slotted.fill(0, kLeftOnly, a);
  take_labels(segments.front());
  for (std::size_t i = 1; i + 1 < segments.size(); ++i) {
    const Segment& seg = segments[i];
    const Step first = p.steps[seg.begin];
    const Step final_step = p.steps[seg.end - 1];
    NodeType type;
    if (seg.end - seg.begin == 1) {
      if (first != Step::level) throw MalformedSegmentation("single-step segment is not a level step");
      type = kMiddleOnly;
    } else {
      if (first == Step::level || final_step == Step::level) {
        throw MalformedSegmentation(fmt::format("segment at step {} neither starts nor ends with a rise or fall",
                                                seg.begin + 1));
      }
      type = NodeType{first == Step::rise, false, final_step == Step::rise};
    }
    slotted.fill(lp.labels[seg.begin].value, type, a);
    take_labels(seg);
  }
  slotted.fill(0, kFall, a);
  take_labels(segments.back());
  return IntervalTree{slotted.tree(), std::move(labels)};
}

StepWeights schroder_master_weights() {
  return [](Step s, int h, const Label& l) -> Poly {
    if (h % 2 == 0) {
      const auto k = static_cast<unsigned>(h / 2);
      switch (s) {
        case Step::rise:
          return Poly::symbol("mu", k);
        case Step::fall:
          if (k == 0) throw InvalidPath("fall from height 0");
          return Poly::symbol("nu", k - 1);
        case Step::level:
          return Poly::symbol("e", k);
      }
    }
    const int croix = (h - 1) / 2 - l.value;
    if (croix < 0 || l.value < 0) throw LabelOutOfRange(fmt::format("label {} exceeds height {}", l.str(), h));
    const auto i = static_cast<unsigned>(croix);
    const auto j = static_cast<unsigned>(l.value);
    switch (s) {
      case Step::rise:
        return Poly::symbol("ah", i, j);
      case Step::fall:
        return Poly::symbol("bh", i, j);
      case Step::level:
        return Poly::symbol("f", i, j);
    }
    return 0;
  };
}

Poly schroder_weight(const LabeledPath& lp) { return path_weight(lp, schroder_master_weights()); }

Poly schroder_weight_of_tree(const IntervalTree& t, Traversal a) {
  return schroder_weight(irt_to_labeled_schroder(t, a));
}

// ------------------------------------------------------------ permutations

Permutation bt_to_permutation(const BinaryTree& t) {
  validate(t);
  std::vector<int> word;
  for (int v : traversal_order(t.shape, Traversal::inorder)) word.push_back(v + 1);
  return Permutation(std::move(word));
}

BinaryTree permutation_to_bt(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::pair<int, Slot>> attach(static_cast<std::size_t>(n) + 1, {0, Slot::left});
  // Places the minimum of positions [lo, hi) below `parent` and recurses.
  std::function<void(int, int, int, Slot)> place = [&](int lo, int hi, int parent, Slot slot) {
    if (lo >= hi) return;
    int at = lo;
    for (int i = lo; i < hi; ++i) {
      if (sigma.at(i) < sigma.at(at)) at = i;
    }
    attach[static_cast<std::size_t>(sigma.at(at))] = {parent, slot};
    place(lo, at, sigma.at(at), Slot::left);
    place(at + 1, hi, sigma.at(at), Slot::right);
  };
  place(1, n + 1, 0, Slot::left);
  BinaryTree t;
  if (n == 0) return t;
  t.shape.add_root();
  for (int label = 2; label <= n; ++label) {
    const auto [parent, slot] = attach[static_cast<std::size_t>(label)];
    t.shape.add_child(parent - 1, slot);
  }
  return t;
}

// ------------------------------------------------------------ checks

CheckReport check_motzkin_bijection(int max_vertices, Traversal a) {
  const LabelSets sets = LabelSets::restricted_ternary();
  const StepWeights weights = motzkin_master_weights();
  Tally total;
  for (int size = 1; size <= max_vertices; ++size) {
    Tally part = reduce_trees(
        Family::ternary, size, Tally{},
        [&](Tally& acc, const TreeShape& shape) {
          ++acc.checked;
          const RestrictedTernaryTree t{shape};
          const LabeledPath lp = rt_to_labeled_motzkin(t, a);
          const auto where = [&] { return to_text(t); };
          try {
            validate(lp, sets);
          } catch (const InvalidPath& e) {
            acc.report.fail(fmt::format("{}: {}", where(), e.what()));
            return;
          }
          const auto h = lp.path.heights();
          const auto stats = vertex_stats(shape, a);
          for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] != stats[i].lev) {
              acc.report.fail(fmt::format("{}: height {} is {}, lev is {}", where(), i, h[i], stats[i].lev));
            }
          }
          for (std::size_t i = 0; i < lp.labels.size(); ++i) {
            if (h[i + 1] - h[i] != stats[i].node_type.degree() - 1) {
              acc.report.fail(fmt::format("{}: step {} breaks the degree law", where(), i + 1));
            }
            if (h[i] - lp.labels[i].value != stats[i].croix) {
              acc.report.fail(fmt::format("{}: step {} height minus label is not croix", where(), i + 1));
            }
          }
          if (labeled_motzkin_to_rt(lp, a) != t) acc.report.fail(fmt::format("{}: roundtrip differs", where()));
          const Poly tree_side(master_weight(shape, a), 1);
          if (tree_side != Poly::symbol("b", 0, 0) * path_weight(lp, weights)) {
            acc.report.fail(fmt::format("{}: path weight differs from tree weight", where()));
          }
        },
        merge);
    // Roundtrip makes the map injective; matching counts make it onto.
    const Poly labeled = flajolet_sum(PathKind::motzkin, size - 1, [](Step, int, const Label&) { return Poly(1); }, sets);
    if (labeled != Poly(static_cast<long>(part.checked))) {
      part.report.fail(fmt::format("size {}: {} trees but {} labeled paths", size, part.checked, labeled.str()));
    }
    total = merge(std::move(total), std::move(part));
  }
  return finish(std::move(total), "restricted ternary trees");
}

CheckReport check_schroder_bijection(int max_n, Traversal a) {
  const LabelSets sets = LabelSets::interval_ternary();
  Tally total;
  for (int n = 0; n <= max_n; ++n) {
    Tally part = reduce_irts(
        n, Tally{},
        [&](Tally& acc, const IntervalTree& t) {
          ++acc.checked;
          const LabeledPath lp = irt_to_labeled_schroder(t, a);
          const auto where = [&] { return to_text(t); };
          try {
            validate(lp, sets);
          } catch (const InvalidPath& e) {
            acc.report.fail(fmt::format("{}: {}", where(), e.what()));
            return;
          }
          if (lp.path.length() != 2 * n) acc.report.fail(fmt::format("{}: path length is not 2n", where()));
          const auto segments = schroder_segments(lp.path);
          const auto stats = vertex_stats(t, a);
          if (segments.size() != stats.size()) {
            acc.report.fail(fmt::format("{}: {} segments for {} vertices", where(), segments.size(), stats.size()));
            return;
          }
          const auto h = lp.path.heights();
          for (std::size_t v = 1; v < stats.size(); ++v) {
            const int start = h[segments[v].begin];
            if (start != 2 * stats[v].lev + 1) {
              acc.report.fail(fmt::format("{}: segment {} starts at height {}", where(), v, start));
            }
            if (start / 2 - lp.labels[segments[v].begin].value != stats[v].croix) {
              acc.report.fail(fmt::format("{}: segment {} label is not nid", where(), v));
            }
            if (segments[v].leven != stats[v].label_surplus) {
              acc.report.fail(fmt::format("{}: segment {} has the wrong number of even levels", where(), v));
            }
            if (v + 1 < stats.size()) {
              const int end = h[segments[v].end];
              if (end != 2 * stats[v].lev + 2 * (stats[v].node_type.degree() - 1) + 1) {
                acc.report.fail(fmt::format("{}: segment {} ends at height {}", where(), v, end));
              }
            }
          }
          if (labeled_schroder_to_irt(lp, a) != t) acc.report.fail(fmt::format("{}: roundtrip differs", where()));
        },
        merge);
    const Poly labeled =
        flajolet_sum(PathKind::schroder, 2 * n, [](Step, int, const Label&) { return Poly(1); }, sets);
    if (labeled != Poly(static_cast<long>(part.checked))) {
      part.report.fail(fmt::format("n = {}: {} trees but {} labeled paths", n, part.checked, labeled.str()));
    }
    total = merge(std::move(total), std::move(part));
  }
  return finish(std::move(total), "interval-labeled trees");
}

CheckReport check_permutation_bijection(int max_n) {
  Tally total;
  for (int n = 0; n <= max_n; ++n) {
    Tally part = reduce_trees(
        Family::binary, n, Tally{},
        [&](Tally& acc, const TreeShape& shape) {
          ++acc.checked;
          const BinaryTree t{shape};
          const Permutation sigma = bt_to_permutation(t);
          if (permutation_to_bt(sigma) != t) {
            acc.report.fail(fmt::format("{}: roundtrip through {} differs", to_text(t), sigma.str()));
          }
        },
        merge);
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
    if (part.checked != factorial) part.report.fail(fmt::format("n = {}: {} trees", n, part.checked));
    total = merge(std::move(total), std::move(part));
  }
  return finish(std::move(total), "binary trees");
}

CheckReport check_schroder_weights(int max_n, Traversal a) {
  Tally total;
  for (int n = 0; n <= max_n; ++n) {
    Tally part = reduce_irts(
        n, Tally{},
        [&](Tally& acc, const IntervalTree& t) {
          ++acc.checked;
          const Poly tree_side(irt_master_weight(t, a), 1);
          const Poly path_side = schroder_weight_of_tree(t, a);
          if (tree_side != path_side) {
            acc.report.fail(fmt::format("{}: tree weight {} but path weight {}", to_text(t), tree_side.str(),
                                        path_side.str()));
          }
        },
        merge);
    total = merge(std::move(total), std::move(part));
  }
  return finish(std::move(total), "interval-labeled trees");
}

}  // namespace tfrac
