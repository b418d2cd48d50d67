// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <vector>

#include "tfrac/lattice_paths.hpp"
#include "tfrac/permutations.hpp"
#include "tfrac/report.hpp"
#include "tfrac/symbolic.hpp"
#include "tfrac/trees.hpp"

namespace tfrac {

class LabelOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class MalformedSegmentation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A partial tree whose placeholder leaves mark where later vertices attach.
///
/// Filled vertices are numbered in fill order; placeholders carry no number.
class SlottedTree {
 public:
  /// A lone placeholder, which the first fill turns into the root.
  SlottedTree();

  /// Number of placeholder leaves.
  [[nodiscard]] int open_slots() const noexcept { return open_; }
  [[nodiscard]] int filled() const noexcept { return filled_; }

  /// Replaces the (rank+1)-th placeholder in traversal order by the next
  /// vertex and gives it placeholder children in the slots of `type`.
  /// Throws LabelOutOfRange if rank >= open_slots().
  void fill(int rank, NodeType type, Traversal a);

  /// The filled vertices as an increasing tree; requires no open slots.
  [[nodiscard]] TreeShape tree() const;

 private:
  TreeShape shape_;
  std::vector<int> fill_index_;  // per shape vertex; -1 for a placeholder
  int open_ = 1;
  int filled_ = 0;
};

/// Motzkin path of length n for an RT on [n+1]: 101 rises, 000 falls, and
/// 100/010/001 become level steps of type 1/2/3. Step i carries nid(i).
LabeledPath rt_to_labeled_motzkin(const RestrictedTernaryTree& t, Traversal a);
RestrictedTernaryTree labeled_motzkin_to_rt(const LabeledPath& lp, Traversal a);

/// Schroder path of length 2n for an IRT on [0,n], one segment per vertex.
/// The first step of each non-root segment carries nid(v); other steps carry 0.
LabeledPath irt_to_labeled_schroder(const IntervalTree& t, Traversal a);
IntervalTree labeled_schroder_to_irt(const LabeledPath& lp, Traversal a);

/// Per-vertex segments of a Schroder path (cut after every step ending at an
/// odd height), as half-open step ranges.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  /// Long level steps at even height inside the segment.
  int leven = 0;
};
std::vector<Segment> schroder_segments(const Path& p);

/// Reads the binary tree in inorder: sigma_i is the label of the i-th vertex.
Permutation bt_to_permutation(const BinaryTree& t);
/// Inverse: the minimum letter is the root, the letters on each side of it
/// form the left and right subtrees.
BinaryTree permutation_to_bt(const Permutation& sigma);

/// Motzkin step weights giving each RT vertex its master letter: rises a,
/// falls b, level steps c, f, d by type, each indexed (h - xi, xi).
StepWeights motzkin_master_weights();

/// Schroder step weights for the IRT master polynomial: odd heights 2k-1 use
/// ah/bh/f at (k-1-xi, xi); even heights 2k use mu_k, nu_{k-1}, e_k.
StepWeights schroder_master_weights();

Poly schroder_weight(const LabeledPath& lp);
/// Step-weight product of the tree's labeled Schroder path.
Poly schroder_weight_of_tree(const IntervalTree& t, Traversal a);

/// Exhaustive roundtrip, height-law and label-law checks.
CheckReport check_motzkin_bijection(int max_vertices, Traversal a);
CheckReport check_schroder_bijection(int max_n, Traversal a);
CheckReport check_permutation_bijection(int max_n);
/// Tree-side master weight equals path-side weight for every IRT on [0,n].
CheckReport check_schroder_weights(int max_n, Traversal a);

}  // namespace tfrac
