// SPDX-License-Identifier: MIT
#pragma once

#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tfrac {

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Slot : std::uint8_t { left = 0, middle = 1, right = 2 };
inline constexpr std::array<Slot, 3> kSlots{Slot::left, Slot::middle, Slot::right};

/// Which child-slot scheme a tree uses; binary trees never fill the middle slot.
enum class Family : std::uint8_t { binary, ternary };

enum class Traversal : std::uint8_t {
  preorder,   // root, left, middle, right
  postorder,  // left, middle, right, root
  inorder,    // left, root, right (binary trees only)
  lrmr,       // left, root, middle, right
};

std::string_view to_string(Traversal t);
Traversal parse_traversal(std::string_view name);

/// Occupied child slots of a vertex.
struct NodeType {
  bool left = false;
  bool middle = false;
  bool right = false;

  [[nodiscard]] int degree() const noexcept { return int(left) + int(middle) + int(right); }
  /// "LR" bits for binary trees, "LMR" bits for ternary ones (e.g. "101").
  [[nodiscard]] std::string str(Family f) const;
  friend bool operator==(NodeType, NodeType) = default;
};

/// A rooted plane tree with at most three child slots per vertex.
///
/// Vertices are indexed 0..size-1 in creation order and the root is 0; every
/// child is created after its parent, so index order is an increasing labeling.
class TreeShape {
 public:
  static constexpr int kNone = -1;

  TreeShape() = default;
  static TreeShape single_vertex();

  [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes_.size()); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
  [[nodiscard]] int parent(int v) const { return nodes_.at(v).parent; }
  [[nodiscard]] Slot slot(int v) const { return nodes_.at(v).slot; }
  [[nodiscard]] int child(int v, Slot s) const { return nodes_.at(v).child[static_cast<int>(s)]; }
  [[nodiscard]] NodeType node_type(int v) const;
  [[nodiscard]] bool is_leaf(int v) const { return node_type(v).degree() == 0; }
  [[nodiscard]] bool has_middle_child(int v) const { return child(v, Slot::middle) != kNone; }

  /// Appends a new vertex as the given child of `parent`; returns its index.
  int add_child(int parent, Slot s);
  /// Adds the root of an empty shape.
  int add_root();
  /// Removes the most recently added vertex, which must be a leaf.
  void remove_last();
  /// The subtree induced by vertices 0..count-1.
  [[nodiscard]] TreeShape prefix(int count) const;

  friend bool operator==(const TreeShape&, const TreeShape&) = default;

 private:
  struct Node {
    int parent = kNone;
    Slot slot = Slot::left;
    std::array<int, 3> child{kNone, kNone, kNone};
    friend bool operator==(const Node&, const Node&) = default;
  };
  std::vector<Node> nodes_;
};

/// Vertices visited in traversal order. Inorder on a tree with a middle child
/// throws ArityMismatch.
std::vector<int> traversal_order(const TreeShape& shape, Traversal t);
/// position[v] = rank of v in traversal_order.
std::vector<int> traversal_positions(const TreeShape& shape, Traversal t);

struct VertexStats {
  NodeType node_type;
  int lev = 0;
  int croix = 0;
  int nid = 0;
  int label_surplus = 0;
};

/// Statistics of every vertex; vertex order is index order.
std::vector<VertexStats> vertex_stats(const TreeShape& shape, Traversal t);
/// lev(v) for every vertex (traversal-independent).
std::vector<int> levels(const TreeShape& shape);

/// Increasing binary tree on [n]; vertex index i carries label i+1.
struct BinaryTree {
  TreeShape shape;
  [[nodiscard]] int size() const { return shape.size(); }
  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
};

/// Increasing restricted ternary tree on [n]; vertex index i carries label i+1.
struct RestrictedTernaryTree {
  TreeShape shape;
  [[nodiscard]] int size() const { return shape.size(); }
  friend bool operator==(const RestrictedTernaryTree&, const RestrictedTernaryTree&) = default;
};

struct Interval {
  int lo = 0;
  int hi = 0;
  [[nodiscard]] int surplus() const noexcept { return hi - lo; }
  friend bool operator==(Interval, Interval) = default;
};

/// Increasing interval-labeled restricted ternary tree on [0,n]. Vertex index
/// order is the interval order; vertex 0 is the root and holds 0.
struct IntervalTree {
  TreeShape shape;
  std::vector<Interval> labels;
  [[nodiscard]] int max_label() const { return labels.empty() ? 0 : labels.back().hi; }
  [[nodiscard]] bool trivial() const { return shape.size() == 1; }
  friend bool operator==(const IntervalTree&, const IntervalTree&) = default;
};

/// Binary tree whose vertices carry sets of labels partitioning [n], with
/// every child label above every parent label. Vertex order is by minimum label.
struct MultiLabeledBinaryTree {
  TreeShape shape;
  std::vector<std::vector<int>> labels;
  friend bool operator==(const MultiLabeledBinaryTree&, const MultiLabeledBinaryTree&) = default;
};

void validate(const BinaryTree& t);
void validate(const RestrictedTernaryTree& t);
void validate(const IntervalTree& t);
void validate(const MultiLabeledBinaryTree& t);

/// Builds an IRT from an RT on [m] (the left subtree of the root) and the
/// surplus of the root followed by the surplus of each RT vertex.
IntervalTree inflate(const RestrictedTernaryTree& rt, const std::vector<int>& surplus);

std::vector<VertexStats> vertex_stats(const IntervalTree& t, Traversal a);

/// Node-type histogram keyed by bitstring ("101", "00", ...).
std::map<std::string, int> node_type_counts(const TreeShape& shape, Family f, bool exclude_root);

MultiLabeledBinaryTree rt_to_multilabeled(const RestrictedTernaryTree& t);
RestrictedTernaryTree multilabeled_to_rt(const MultiLabeledBinaryTree& t);

// ------------------------------------------------------------ text format
//
// Vertex := Label [ "(" Child "," Child ["," Child] ")" ], Child := Vertex | "-".
// Binary trees list two slots (left, right), ternary ones three. Labels are
// integers, intervals "[lo,hi]" or sets "{a,b,c}".

std::string to_text(const BinaryTree& t);
std::string to_text(const RestrictedTernaryTree& t);
std::string to_text(const IntervalTree& t);
std::string to_text(const MultiLabeledBinaryTree& t);
BinaryTree parse_binary_tree(std::string_view text);
RestrictedTernaryTree parse_rt(std::string_view text);
IntervalTree parse_irt(std::string_view text);
MultiLabeledBinaryTree parse_multilabeled(std::string_view text);

// ------------------------------------------------------------ enumeration

namespace detail {

/// Legal attachment points for a new maximum label, in deterministic order.
inline bool can_attach(const TreeShape& s, Family f, int v, Slot slot) {
  if (s.child(v, slot) != TreeShape::kNone) return false;
  if (slot == Slot::middle) return f == Family::ternary && s.is_leaf(v);
  return !s.has_middle_child(v);
}

template <class Visit>
void grow(TreeShape& s, Family f, int target, Visit& visit) {
  if (s.size() == target) {
    visit(std::as_const(s));
    return;
  }
  const int count = s.size();
  for (int v = 0; v < count; ++v) {
    for (Slot slot : kSlots) {
      if (!can_attach(s, f, v, slot)) continue;
      s.add_child(v, slot);
      grow(s, f, target, visit);
      s.remove_last();
    }
  }
}

}  // namespace detail

/// Calls visit(const TreeShape&) for every increasing tree of the family on n
/// vertices, attaching each new maximum label at every legal position.
template <class Visit>
void for_each_tree(Family f, int n, Visit&& visit) {
  TreeShape s;
  if (n == 0) {
    visit(std::as_const(s));
    return;
  }
  s.add_root();
  detail::grow(s, f, n, visit);
}

/// All trees of the family on `size` vertices (materialized).
std::vector<TreeShape> all_trees(Family f, int size);

/// Deterministic parallel reduction over all trees of a family. `visit(acc,
/// shape)` folds one tree; `combine(a, b)` must be associative and commutative.
template <class Acc, class Visit, class Combine>
Acc reduce_trees(Family f, int n, Acc identity, Visit visit, Combine combine) {
  if (n <= 4) {
    Acc acc = identity;
    for_each_tree(f, n, [&](const TreeShape& s) { visit(acc, s); });
    return acc;
  }
  const std::vector<TreeShape> prefixes = all_trees(f, 4);
  return tbb::parallel_reduce(
      tbb::blocked_range<std::size_t>(0, prefixes.size()), identity,
      [&](const tbb::blocked_range<std::size_t>& r, Acc acc) {
        for (std::size_t i = r.begin(); i != r.end(); ++i) {
          TreeShape s = prefixes[i];
          auto fold = [&](const TreeShape& full) { visit(acc, full); };
          detail::grow(s, f, n, fold);
        }
        return acc;
      },
      combine);
}

/// Calls visit(const IntervalTree&) for every IRT on [0,n]. Each IRT is an RT
/// on [m] hung below the root, with the remaining n-m labels spread as
/// surplus over the root and the vertices that have no middle child.
void for_each_irt(int n, const std::function<void(const IntervalTree&)>& visit);

template <class Acc, class Visit, class Combine>
Acc reduce_irts(int n, Acc identity, Visit visit, Combine combine);

/// Calls visit for every multilabeled binary tree on [n].
void for_each_multilabeled(int n, const std::function<void(const MultiLabeledBinaryTree&)>& visit);

std::uint64_t count_binary(int n);
std::uint64_t count_rt(int n);
std::uint64_t count_irt(int n);

// ------------------------------------------------------------ implementation

namespace detail {
void for_each_surplus(const RestrictedTernaryTree& rt, int extra,
                      const std::function<void(const IntervalTree&)>& visit);
}

template <class Acc, class Visit, class Combine>
Acc reduce_irts(int n, Acc identity, Visit visit, Combine combine) {
  Acc total = identity;
  for (int m = 0; m <= n; ++m) {
    Acc part = reduce_trees(
        Family::ternary, m, identity,
        [&](Acc& acc, const TreeShape& s) {
          detail::for_each_surplus(RestrictedTernaryTree{s}, n - m,
                                   [&](const IntervalTree& t) { visit(acc, t); });
        },
        combine);
    total = combine(std::move(total), std::move(part));
  }
  return total;
}

}  // namespace tfrac
