// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "tfrac/symbolic.hpp"

namespace tfrac {

// Readable failure messages in GTest assertions.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }

}  // namespace tfrac

namespace tfrac::testing {

inline constexpr std::uint64_t kSeed = 0x7f4a7c15;

/// Random polynomial in x, y, z with small coefficients and degree <= 3.
inline Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> exponent(0, 3);
  std::uniform_int_distribution<int> terms(0, 4);
  Poly p;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    Poly term(coeff(rng));
    term *= Poly::symbol("x").pow(exponent(rng));
    term *= Poly::symbol("y").pow(exponent(rng));
    term *= Poly::symbol("z", 1).pow(exponent(rng));
    p += term;
  }
  return p;
}

}  // namespace tfrac::testing
