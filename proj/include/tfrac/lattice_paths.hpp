// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfrac/continued_fraction.hpp"
#include "tfrac/symbolic.hpp"

namespace tfrac {

class InvalidPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PathKind : std::uint8_t { motzkin, dyck, schroder };

/// Rise, fall, or level step; in a Schroder path a level step is long (width 2).
enum class Step : std::uint8_t { rise, fall, level };

std::string_view to_string(PathKind k);
PathKind parse_path_kind(std::string_view name);

struct Path {
  PathKind kind = PathKind::motzkin;
  std::vector<Step> steps;

  /// Height before each step, followed by the final height (size steps+1).
  [[nodiscard]] std::vector<int> heights() const;
  /// Horizontal extent: the step count, with long level steps counting 2.
  [[nodiscard]] int length() const;
  /// Word in the letters U, D, L.
  [[nodiscard]] std::string str() const;
  static Path parse(PathKind kind, std::string_view word);

  friend bool operator==(const Path&, const Path&) = default;
};

/// Throws InvalidPath unless heights stay >= 0, the path returns to 0, and
/// the kind's step restrictions hold.
void validate(const Path& p);

/// A step label: a plain integer (kind 0) or a typed pair (kind, value).
struct Label {
  int kind = 0;
  int value = 0;
  [[nodiscard]] std::string str() const;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Admissible labels by step and starting height; an empty set forbids the step.
struct LabelSets {
  std::function<std::vector<Label>(Step, int height)> labels;

  static LabelSets unit();
  /// A_h = B_h = {0..h}, C_h = {1,2,3} x {0..h}.
  static LabelSets restricted_ternary();
  /// Singletons {0} at even heights, {0..floor(h/2)} at odd heights.
  static LabelSets interval_ternary();
};

using LabelSequence = std::vector<Label>;

struct LabeledPath {
  Path path;
  LabelSequence labels;
  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;
};

/// Throws InvalidPath if a label lies outside its admissible set.
void validate(const LabeledPath& lp, const LabelSets& sets);

/// Weight of one labeled step starting at the given height.
using StepWeights = std::function<Poly(Step, int height, const Label&)>;

/// All paths of the kind with the given horizontal length (Schroder: 2n).
std::vector<Path> enumerate_paths(PathKind kind, int length);
void for_each_path(PathKind kind, int length, const std::function<void(const Path&)>& visit);
/// Cartesian product of the admissible label sets along the path.
std::vector<LabelSequence> enumerate_labelings(const Path& p, const LabelSets& sets);

Poly path_weight(const LabeledPath& lp, const StepWeights& weights);

/// Sum of weights over labeled paths of horizontal length `length`, computed
/// by transfer over heights. Dyck and Schroder lengths are even.
Poly flajolet_sum(PathKind kind, int length, const StepWeights& weights, const LabelSets& sets);
/// Same sum by explicit enumeration of paths and labelings.
Poly flajolet_sum_bruteforce(PathKind kind, int length, const StepWeights& weights, const LabelSets& sets);

/// Height-summed weights a_h, b_h, c_h.
Poly summed_weight(Step s, int height, const StepWeights& weights, const LabelSets& sets);

/// gamma_h = c_h, beta_h = a_{h-1} b_h.
JFractionSpec motzkin_fraction(const StepWeights& weights, const LabelSets& sets);
/// alpha_h = a_{h-1} b_h.
SFractionSpec dyck_fraction(const StepWeights& weights, const LabelSets& sets);
/// alpha_h = a_{h-1} b_h, delta_{h+1} = c_h.
TFractionSpec schroder_fraction(const StepWeights& weights, const LabelSets& sets);

/// Standard Schroder weights for a T-fraction: rises 1, falls from h get
/// alpha_h, long levels at h get delta_{h+1}.
StepWeights schroder_weights(const TFractionSpec& spec);
/// The paired alternative: weight 1 at even heights, alpha_{2k} on rises
/// and alpha_{2k-1} on falls from height 2k-1, delta_{h+1} on long levels.
StepWeights schroder_weights_alternative(const TFractionSpec& spec);

/// ASCII drawing with '/', '\\', '_' ("__" for long levels), top row first.
std::string render(const Path& p);

}  // namespace tfrac
