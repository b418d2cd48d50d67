// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tfrac/symbolic.hpp"
#include "tfrac/trees.hpp"

namespace tfrac {

class UnknownTheorem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every result the suite can verify.
enum class TheoremId : std::uint8_t {
  prop_odd_contraction,
  prop_transformation,
  thm_bt_simple_j,
  thm_bt_simple_t,
  cor_bt_s_eulerian,
  thm_bt_master_j,
  thm_bt_master_t,
  cor_bt_master_s,
  thm_rt_simple_j,
  cor_rt_j_counts,
  thm_rt_simple_t,
  cor_rt_counts,
  thm_rt_master_j,
  thm_rt_master_t,
  cor_rt_master_t,
  thm_rt_master_star,
  thm_irt_simple_t,
  cor_irt_counts,
  thm_irt_simple_new,
  thm_irt_master_t,
  flajolet_motzkin,
  flajolet_dyck,
  flajolet_schroder,
  eq_ogf_rtt_irtt,
  thm_perm_master,
  cor_perm_pq,
  prop_perm_equidist,
  prop_croix_nid_translate,
  prop_grammar_bt,
  prop_grammar_rt,
};

/// All ids in declaration order.
std::span<const TheoremId> all_theorems();
/// Kebab-case name, e.g. "thm-rt-master-j".
std::string_view to_string(TheoremId id);
/// Throws UnknownTheorem for names outside the registry.
TheoremId parse_theorem_id(std::string_view name);
/// One-line statement of what the check equates.
std::string_view describe(TheoremId id);
/// Order used when VerifySpec::order is unset.
unsigned default_order(TheoremId id);
/// Master identities run symbolically up to kSymbolicMasterOrder and
/// prime-specialized beyond it.
bool is_master(TheoremId id);
inline constexpr unsigned kSymbolicMasterOrder = 5;

enum class Evaluation : std::uint8_t {
  symbolic,           // exact polynomial identity
  prime_specialized,  // every remaining symbol replaced by a distinct prime
  randomized,         // random integer coefficient specs
};
std::string_view to_string(Evaluation e);

struct VerifySpec {
  TheoremId theorem = TheoremId::prop_odd_contraction;
  std::optional<unsigned> order;
  Traversal traversal = Traversal::preorder;
  /// Applied to both sides before comparison; unlisted symbols stay free.
  std::optional<Substitution> specialization;
  std::uint64_t seed = 0x5eed2024;
  unsigned trials = 100;
};

struct OrderCheck {
  unsigned order = 0;
  Evaluation evaluation = Evaluation::symbolic;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::prop_odd_contraction;
  bool pass = false;
  std::vector<OrderCheck> checks;
  double seconds = 0;
  /// First mismatch on failure, a summary of what was compared on success.
  std::string detail;
};

TheoremReport verify(const VerifySpec& spec);
/// Runs the specs concurrently; reports come back in input order.
std::vector<TheoremReport> verify_all(std::span<const VerifySpec> specs);
/// One default spec per registered id.
std::vector<VerifySpec> default_specs(Traversal traversal = Traversal::preorder);

}  // namespace tfrac
