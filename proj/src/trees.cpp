// SPDX-License-Identifier: MIT
#include "tfrac/trees.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <optional>

namespace tfrac {

std::string_view to_string(Traversal t) {
  switch (t) {
    case Traversal::preorder:
      return "preorder";
    case Traversal::postorder:
      return "postorder";
    case Traversal::inorder:
      return "inorder";
    case Traversal::lrmr:
      return "lrmr";
  }
  return "?";
}

Traversal parse_traversal(std::string_view name) {
  if (name == "preorder" || name == "pre" || name == "A") return Traversal::preorder;
  if (name == "postorder" || name == "post") return Traversal::postorder;
  if (name == "inorder" || name == "in") return Traversal::inorder;
  if (name == "lrmr" || name == "A'" || name == "Aprime") return Traversal::lrmr;
  throw std::invalid_argument(fmt::format("unknown traversal '{}' (preorder|postorder|inorder|lrmr)", name));
}

std::string NodeType::str(Family f) const {
  std::string s;
  s += left ? '1' : '0';
  if (f == Family::ternary) s += middle ? '1' : '0';
  s += right ? '1' : '0';
  return s;
}

// -------------------------------------------------------------- TreeShape

TreeShape TreeShape::single_vertex() {
  TreeShape s;
  s.add_root();
  return s;
}

NodeType TreeShape::node_type(int v) const {
  const auto& c = nodes_.at(v).child;
  return {c[0] != kNone, c[1] != kNone, c[2] != kNone};
}

int TreeShape::add_root() {
  if (!nodes_.empty()) throw std::logic_error("add_root on a nonempty tree");
  nodes_.emplace_back();
  return 0;
}

int TreeShape::add_child(int parent, Slot s) {
  auto& slot_ref = nodes_.at(parent).child[static_cast<int>(s)];
  if (slot_ref != kNone) throw InvalidTree("child slot already occupied");
  const int v = size();
  slot_ref = v;
  nodes_.push_back(Node{parent, s, {kNone, kNone, kNone}});
  return v;
}

void TreeShape::remove_last() {
  const int v = size() - 1;
  const Node& n = nodes_.back();
  if (n.parent != kNone) nodes_[n.parent].child[static_cast<int>(n.slot)] = kNone;
  nodes_.pop_back();
  (void)v;
}

TreeShape TreeShape::prefix(int count) const {
  TreeShape s;
  s.nodes_.assign(nodes_.begin(), nodes_.begin() + count);
  for (auto& n : s.nodes_) {
    for (auto& c : n.child) {
      if (c >= count) c = kNone;
    }
  }
  return s;
}

// -------------------------------------------------------------- traversal

namespace {

void visit_order(const TreeShape& s, int v, Traversal t, std::vector<int>& out) {
  if (v == TreeShape::kNone) return;
  const int l = s.child(v, Slot::left);
  const int m = s.child(v, Slot::middle);
  const int r = s.child(v, Slot::right);
  switch (t) {
    case Traversal::preorder:
      out.push_back(v);
      visit_order(s, l, t, out);
      visit_order(s, m, t, out);
      visit_order(s, r, t, out);
      break;
    case Traversal::postorder:
      visit_order(s, l, t, out);
      visit_order(s, m, t, out);
      visit_order(s, r, t, out);
      out.push_back(v);
      break;
    case Traversal::inorder:
      if (m != TreeShape::kNone) throw ArityMismatch("inorder traversal needs a binary tree");
      visit_order(s, l, t, out);
      out.push_back(v);
      visit_order(s, r, t, out);
      break;
    case Traversal::lrmr:
      visit_order(s, l, t, out);
      out.push_back(v);
      visit_order(s, m, t, out);
      visit_order(s, r, t, out);
      break;
  }
}

}  // namespace

std::vector<int> traversal_order(const TreeShape& shape, Traversal t) {
  std::vector<int> out;
  out.reserve(shape.size());
  if (!shape.empty()) visit_order(shape, 0, t, out);
  return out;
}

std::vector<int> traversal_positions(const TreeShape& shape, Traversal t) {
  const auto order = traversal_order(shape, t);
  std::vector<int> pos(shape.size());
  for (int k = 0; k < static_cast<int>(order.size()); ++k) pos[order[k]] = k;
  return pos;
}

std::vector<int> levels(const TreeShape& shape) {
  const int n = shape.size();
  std::vector<int> lev(n, 0);
  for (int w = 1; w < n; ++w) {
    for (int v = shape.parent(w) + 1; v < w; ++v) ++lev[v];
  }
  return lev;
}

std::vector<VertexStats> vertex_stats(const TreeShape& shape, Traversal t) {
  const int n = shape.size();
  const auto pos = traversal_positions(shape, t);
  std::vector<VertexStats> out(n);
  for (int v = 0; v < n; ++v) out[v].node_type = shape.node_type(v);
  for (int w = 1; w < n; ++w) {
    for (int v = shape.parent(w) + 1; v < w; ++v) {
      ++out[v].lev;
      if (pos[v] < pos[w]) {
        ++out[v].croix;
      } else {
        ++out[v].nid;
      }
    }
  }
  return out;
}

std::vector<VertexStats> vertex_stats(const IntervalTree& t, Traversal a) {
  auto stats = vertex_stats(t.shape, a);
  for (std::size_t v = 0; v < stats.size(); ++v) stats[v].label_surplus = t.labels[v].surplus();
  return stats;
}

std::map<std::string, int> node_type_counts(const TreeShape& shape, Family f, bool exclude_root) {
  std::map<std::string, int> counts;
  for (int v = exclude_root ? 1 : 0; v < shape.size(); ++v) ++counts[shape.node_type(v).str(f)];
  return counts;
}

// ------------------------------------------------------------- validation

namespace {

void check_shape_family(const TreeShape& s, Family f) {
  for (int v = 0; v < s.size(); ++v) {
    const NodeType nt = s.node_type(v);
    if (nt.middle && f == Family::binary) throw InvalidTree("binary tree has a middle child");
    if (nt.middle && (nt.left || nt.right)) throw InvalidTree("middle child with a sibling");
  }
}

}  // namespace

void validate(const BinaryTree& t) { check_shape_family(t.shape, Family::binary); }

void validate(const RestrictedTernaryTree& t) { check_shape_family(t.shape, Family::ternary); }

void validate(const IntervalTree& t) {
  const TreeShape& s = t.shape;
  if (s.empty() || t.labels.size() != static_cast<std::size_t>(s.size())) {
    throw InvalidTree("IRT needs one interval per vertex");
  }
  check_shape_family(s, Family::ternary);
  int expected = 0;
  for (const auto& iv : t.labels) {
    if (iv.lo != expected || iv.hi < iv.lo) throw InvalidTree("IRT intervals must partition [0,n] in vertex order");
    expected = iv.hi + 1;
  }
  const NodeType root = s.node_type(0);
  if (root.middle || root.right) throw InvalidTree("IRT root may only have a left child");
  for (int v = 0; v < s.size(); ++v) {
    if (s.has_middle_child(v) && t.labels[v].surplus() != 0) {
      throw InvalidTree("IRT vertex with a middle child must be single-labeled");
    }
  }
}

void validate(const MultiLabeledBinaryTree& t) {
  const TreeShape& s = t.shape;
  check_shape_family(s, Family::binary);
  if (t.labels.size() != static_cast<std::size_t>(s.size())) throw InvalidTree("one label set per vertex");
  std::vector<int> all;
  for (const auto& l : t.labels) {
    if (l.empty() || !std::is_sorted(l.begin(), l.end())) throw InvalidTree("label sets must be nonempty and sorted");
    all.insert(all.end(), l.begin(), l.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] != static_cast<int>(k) + 1) throw InvalidTree("label sets must partition [n]");
  }
  for (int v = 1; v < s.size(); ++v) {
    if (t.labels[s.parent(v)].back() >= t.labels[v].front()) {
      throw InvalidTree("child labels must exceed parent labels");
    }
    if (t.labels[v - 1].front() >= t.labels[v].front()) throw InvalidTree("vertices must be ordered by minimum label");
  }
}

// ------------------------------------------------------------ IRT inflation

IntervalTree inflate(const RestrictedTernaryTree& rt, const std::vector<int>& surplus) {
  const int m = rt.size();
  if (surplus.size() != static_cast<std::size_t>(m + 1)) throw std::invalid_argument("inflate: surplus size");
  IntervalTree t;
  t.shape.add_root();
  for (int v = 0; v < m; ++v) {
    const int parent = (v == 0) ? 0 : rt.shape.parent(v) + 1;
    const Slot slot = (v == 0) ? Slot::left : rt.shape.slot(v);
    t.shape.add_child(parent, slot);
  }
  int next = 0;
  for (int v = 0; v <= m; ++v) {
    t.labels.push_back({next, next + surplus[v]});
    next += surplus[v] + 1;
  }
  return t;
}

namespace detail {

void for_each_surplus(const RestrictedTernaryTree& rt, int extra,
                      const std::function<void(const IntervalTree&)>& visit) {
  const int m = rt.size();
  // Slot 0 is the IRT root; slot v+1 is RT vertex v.
  std::vector<int> inflatable{0};
  for (int v = 0; v < m; ++v) {
    if (!rt.shape.has_middle_child(v)) inflatable.push_back(v + 1);
  }
  std::vector<int> surplus(m + 1, 0);
  std::function<void(std::size_t, int)> spread = [&](std::size_t k, int left) {
    if (k + 1 == inflatable.size()) {
      surplus[inflatable[k]] = left;
      visit(inflate(rt, surplus));
      surplus[inflatable[k]] = 0;
      return;
    }
    for (int s = left; s >= 0; --s) {
      surplus[inflatable[k]] = s;
      spread(k + 1, left - s);
    }
    surplus[inflatable[k]] = 0;
  };
  spread(0, extra);
}

}  // namespace detail

void for_each_irt(int n, const std::function<void(const IntervalTree&)>& visit) {
  for (int m = 0; m <= n; ++m) {
    for_each_tree(Family::ternary, m, [&](const TreeShape& s) {
      detail::for_each_surplus(RestrictedTernaryTree{s}, n - m, visit);
    });
  }
}

std::vector<TreeShape> all_trees(Family f, int size) {
  std::vector<TreeShape> out;
  for_each_tree(f, size, [&](const TreeShape& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_binary(int n) {
  return reduce_trees(Family::binary, n, std::uint64_t{0},
                      [](std::uint64_t& acc, const TreeShape&) { ++acc; }, std::plus<>());
}

std::uint64_t count_rt(int n) {
  return reduce_trees(Family::ternary, n, std::uint64_t{0},
                      [](std::uint64_t& acc, const TreeShape&) { ++acc; }, std::plus<>());
}

std::uint64_t count_irt(int n) {
  return reduce_irts(n, std::uint64_t{0}, [](std::uint64_t& acc, const IntervalTree&) { ++acc; },
                     std::plus<>());
}

// ----------------------------------------------------- multilabeled trees

MultiLabeledBinaryTree rt_to_multilabeled(const RestrictedTernaryTree& t) {
  const TreeShape& s = t.shape;
  MultiLabeledBinaryTree out;
  if (s.empty()) return out;
  // Chain tops are the vertices that are not middle children; they are visited
  // in label order, which is also the order of their minimum labels.
  std::vector<int> contracted(s.size(), TreeShape::kNone);
  for (int v = 0; v < s.size(); ++v) {
    if (v != 0 && s.slot(v) == Slot::middle) continue;
    std::vector<int> labels{v + 1};
    int bottom = v;
    while (s.has_middle_child(bottom)) {
      bottom = s.child(bottom, Slot::middle);
      labels.push_back(bottom + 1);
    }
    int id = 0;
    if (v == 0) {
      id = out.shape.add_root();
    } else {
      // v hangs off the bottom of its parent's chain.
      id = out.shape.add_child(contracted[s.parent(v)], s.slot(v));
    }
    for (int label : labels) contracted[label - 1] = id;
    out.labels.push_back(std::move(labels));
  }
  return out;
}

RestrictedTernaryTree multilabeled_to_rt(const MultiLabeledBinaryTree& t) {
  validate(t);
  const TreeShape& s = t.shape;
  int n = 0;
  for (const auto& l : t.labels) n += static_cast<int>(l.size());
  // parent label and slot for every label.
  std::vector<std::pair<int, Slot>> link(n + 1, {0, Slot::left});
  for (int v = 0; v < s.size(); ++v) {
    const auto& labels = t.labels[v];
    for (std::size_t k = 1; k < labels.size(); ++k) link[labels[k]] = {labels[k - 1], Slot::middle};
    if (v > 0) link[labels.front()] = {t.labels[s.parent(v)].back(), s.slot(v)};
  }
  RestrictedTernaryTree rt;
  if (n == 0) return rt;
  rt.shape.add_root();
  for (int label = 2; label <= n; ++label) rt.shape.add_child(link[label].first - 1, link[label].second);
  return rt;
}

void for_each_multilabeled(int n, const std::function<void(const MultiLabeledBinaryTree&)>& visit) {
  MultiLabeledBinaryTree t;
  if (n == 0) {
    visit(t);
    return;
  }
  // Insert labels 1..n: a new label either joins a leaf's label set or
  // becomes a new child in an empty slot. Vertices are kept in creation order,
  // which matches minimum-label order.
  t.shape.add_root();
  t.labels.push_back({1});
  std::function<void(int)> grow = [&](int next) {
    if (next > n) {
      visit(t);
      return;
    }
    const int count = t.shape.size();
    for (int v = 0; v < count; ++v) {
      if (t.shape.is_leaf(v)) {
        t.labels[v].push_back(next);
        grow(next + 1);
        t.labels[v].pop_back();
      }
      for (Slot slot : {Slot::left, Slot::right}) {
        if (t.shape.child(v, slot) != TreeShape::kNone) continue;
        t.shape.add_child(v, slot);
        t.labels.push_back({next});
        grow(next + 1);
        t.labels.pop_back();
        t.shape.remove_last();
      }
    }
  };
  grow(2);
}

// -------------------------------------------------------------- text form

namespace {

struct TextNode {
  std::string label;
  std::vector<std::unique_ptr<TextNode>> children;  // null = empty slot
};

class TreeTextParser {
 public:
  explicit TreeTextParser(std::string_view text) : text_(text) {}

  std::unique_ptr<TextNode> parse() {
    auto root = vertex();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return root;
  }

 private:
  [[noreturn]] void fail(std::string_view what) const {
    throw InvalidTree(fmt::format("tree text: {} at offset {} in '{}'", what, pos_, text_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string label() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '[' || text_[pos_] == '{')) {
      const char close = text_[pos_] == '[' ? ']' : '}';
      while (pos_ < text_.size() && text_[pos_] != close) ++pos_;
      if (pos_ == text_.size()) fail("unterminated label");
      ++pos_;
    } else {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::unique_ptr<TextNode> vertex() {
    auto node = std::make_unique<TextNode>();
    node->label = label();
    if (accept('(')) {
      do {
        if (accept('-')) {
          node->children.push_back(nullptr);
        } else {
          node->children.push_back(vertex());
        }
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<int> parse_label_numbers(const std::string& label) {
  std::vector<int> out;
  int value = 0;
  bool in_number = false;
  for (char ch : label) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      value = value * 10 + (ch - '0');
      in_number = true;
    } else if (in_number) {
      out.push_back(value);
      value = 0;
      in_number = false;
    }
  }
  if (in_number) out.push_back(value);
  return out;
}

struct FlatVertex {
  std::vector<int> numbers;
  int parent = -1;
  Slot slot = Slot::left;
  char bracket = ' ';
};

void flatten(const TextNode& node, int parent, Slot slot, std::size_t arity, std::vector<FlatVertex>& out) {
  if (!node.children.empty() && node.children.size() != arity) {
    throw InvalidTree(fmt::format("vertex '{}' lists {} child slots, expected {}", node.label,
                                  node.children.size(), arity));
  }
  const int id = static_cast<int>(out.size());
  out.push_back({parse_label_numbers(node.label), parent, slot, node.label.front()});
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    if (!node.children[k]) continue;
    const Slot s = (arity == 2) ? (k == 0 ? Slot::left : Slot::right) : kSlots[k];
    flatten(*node.children[k], id, s, arity, out);
  }
}

/// Rebuilds a shape whose vertex order follows `key` (ascending).
TreeShape rebuild(const std::vector<FlatVertex>& flat, const std::vector<int>& key, std::vector<int>& order) {
  order.resize(flat.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<int> index_of(flat.size());
  for (std::size_t k = 0; k < order.size(); ++k) index_of[order[k]] = static_cast<int>(k);
  if (!flat.empty() && index_of[0] != 0) throw InvalidTree("root must carry the smallest label");
  TreeShape s;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const FlatVertex& fv = flat[order[k]];
    if (k == 0) {
      s.add_root();
      continue;
    }
    const int parent = index_of[fv.parent];
    if (parent >= static_cast<int>(k)) throw InvalidTree("labels must increase from parent to child");
    s.add_child(parent, fv.slot);
  }
  return s;
}

template <class Tree>
Tree parse_single_labeled(std::string_view text, Family f) {
  auto root = TreeTextParser(text).parse();
  std::vector<FlatVertex> flat;
  flatten(*root, -1, Slot::left, f == Family::binary ? 2 : 3, flat);
  std::vector<int> key;
  for (const auto& fv : flat) {
    if (fv.numbers.size() != 1 || fv.bracket == '[' || fv.bracket == '{') {
      throw InvalidTree("single-labeled trees use plain integer labels");
    }
    key.push_back(fv.numbers[0]);
  }
  std::vector<int> order;
  Tree t{rebuild(flat, key, order)};
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (key[order[k]] != static_cast<int>(k) + 1) throw InvalidTree("labels must be exactly 1..n");
  }
  validate(t);
  return t;
}

template <class LabelFn>
std::string render(const TreeShape& s, Family f, int v, const LabelFn& label) {
  std::string out = label(v);
  if (s.is_leaf(v)) return out;
  out += '(';
  bool first = true;
  for (Slot slot : kSlots) {
    if (f == Family::binary && slot == Slot::middle) continue;
    if (!first) out += ',';
    first = false;
    const int c = s.child(v, slot);
    out += (c == TreeShape::kNone) ? "-" : render(s, f, c, label);
  }
  out += ')';
  return out;
}

}  // namespace

std::string to_text(const BinaryTree& t) {
  if (t.shape.empty()) return "";
  return render(t.shape, Family::binary, 0, [](int v) { return std::to_string(v + 1); });
}

std::string to_text(const RestrictedTernaryTree& t) {
  if (t.shape.empty()) return "";
  return render(t.shape, Family::ternary, 0, [](int v) { return std::to_string(v + 1); });
}

std::string to_text(const IntervalTree& t) {
  return render(t.shape, Family::ternary, 0, [&](int v) {
    const Interval iv = t.labels[v];
    return iv.lo == iv.hi ? std::to_string(iv.lo) : fmt::format("[{},{}]", iv.lo, iv.hi);
  });
}

std::string to_text(const MultiLabeledBinaryTree& t) {
  if (t.shape.empty()) return "";
  return render(t.shape, Family::binary, 0, [&](int v) {
    const auto& l = t.labels[v];
    return l.size() == 1 ? std::to_string(l[0]) : fmt::format("{{{}}}", fmt::join(l, ","));
  });
}

BinaryTree parse_binary_tree(std::string_view text) {
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) return {};
  return parse_single_labeled<BinaryTree>(text, Family::binary);
}

RestrictedTernaryTree parse_rt(std::string_view text) {
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) return {};
  return parse_single_labeled<RestrictedTernaryTree>(text, Family::ternary);
}

IntervalTree parse_irt(std::string_view text) {
  auto root = TreeTextParser(text).parse();
  std::vector<FlatVertex> flat;
  flatten(*root, -1, Slot::left, 3, flat);
  std::vector<int> key;
  for (const auto& fv : flat) {
    const bool ok = (fv.bracket == '[' && fv.numbers.size() == 2) || (fv.numbers.size() == 1 && fv.bracket != '{' && fv.bracket != '[');
    if (!ok) throw InvalidTree("IRT labels are integers or intervals [lo,hi]");
    key.push_back(fv.numbers[0]);
  }
  std::vector<int> order;
  IntervalTree t{rebuild(flat, key, order), {}};
  for (int k : order) {
    const auto& nums = flat[k].numbers;
    t.labels.push_back({nums.front(), nums.back()});
  }
  validate(t);
  return t;
}

MultiLabeledBinaryTree parse_multilabeled(std::string_view text) {
  if (text.find_first_not_of(" \t\n") == std::string_view::npos) return {};
  auto root = TreeTextParser(text).parse();
  std::vector<FlatVertex> flat;
  flatten(*root, -1, Slot::left, 2, flat);
  std::vector<int> key;
  for (const auto& fv : flat) {
    if (fv.numbers.empty() || fv.bracket == '[') throw InvalidTree("multilabeled vertices use integers or {a,b,...}");
    key.push_back(*std::min_element(fv.numbers.begin(), fv.numbers.end()));
  }
  std::vector<int> order;
  MultiLabeledBinaryTree t{rebuild(flat, key, order), {}};
  for (int k : order) {
    auto nums = flat[k].numbers;
    std::sort(nums.begin(), nums.end());
    t.labels.push_back(std::move(nums));
  }
  validate(t);
  return t;
}

}  // namespace tfrac
