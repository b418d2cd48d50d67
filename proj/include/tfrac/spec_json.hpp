// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string_view>

#include "tfrac/continued_fraction.hpp"
#include "tfrac/symbolic.hpp"

namespace tfrac {

class SpecParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text encodings of fraction specs for the command line.
//
// A coefficient sequence is JSON in one of three forms:
//   [c1, c2, ...]                    table from the first index, zero beyond it
//   "poly in i"                      rule evaluated at the coefficient index i
//   {"odd": "poly in k", "even": "poly in k"}
//                                    period-2 rule with block index k = ceil(i/2)
// Entries are integers or polynomial strings.

CoeffSeq parse_coeff_seq(std::string_view json, unsigned first_index = 1);

/// "quasiaffine:x,y,u,v,a,b,c,d" or {"alpha": seq, "delta": seq}.
TFractionSpec parse_tfraction(std::string_view text);
/// {"gamma": seq, "beta": seq}; gamma starts at index 0, beta at 1.
JFractionSpec parse_jfraction(std::string_view text);
/// {"alpha": seq}.
SFractionSpec parse_sfraction(std::string_view text);

/// {"x1": 1, "a(0,1)": "p*q", ...}; keys are symbols, values integers or polynomials.
Substitution parse_substitution(std::string_view json);

}  // namespace tfrac
