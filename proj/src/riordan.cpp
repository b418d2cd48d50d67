// SPDX-License-Identifier: MIT
#include "tfrac/riordan.hpp"

#include <fmt/format.h>

namespace tfrac {

namespace {

mpz_class factorial(std::size_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// Ordinary series to the given order (extending with zeros).
RationalSeries resized(const RationalSeries& s, unsigned order) {
  std::vector<mpq_class> c(order + 1);
  for (unsigned n = 0; n <= order && n <= s.order(); ++n) c[n] = s.coeff(n);
  return RationalSeries(std::move(c));
}

std::string csv_field(const mpq_class& v) { return v.get_str(); }

std::string csv_field(const Poly& p) {
  std::string s = p.str();
  return s.find(',') == std::string::npos ? s : fmt::format("\"{}\"", s);
}

}  // namespace

RationalSeries egf_to_ordinary(const RationalSeries& egf) {
  std::vector<mpq_class> c(egf.coeffs());
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] /= factorial(n);
    c[n].canonicalize();
  }
  return RationalSeries(std::move(c));
}

RationalSeries ordinary_to_egf(const RationalSeries& ordinary) {
  std::vector<mpq_class> c(ordinary.coeffs());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= factorial(n);
  return RationalSeries(std::move(c));
}

RationalMatrix riordan_matrix(const EgfPair& pair, std::size_t size) {
  RationalMatrix out(size);
  if (size == 0) return out;
  const auto order = static_cast<unsigned>(size - 1);
  if (pair.g.coeff(0) != 0) throw std::invalid_argument("G must have zero constant term");
  const RationalSeries f = resized(egf_to_ordinary(pair.f), order);
  const RationalSeries g = resized(egf_to_ordinary(pair.g), order);
  RationalSeries column = f;  // F G^k
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t n = k; n < size; ++n) {
      mpq_class v = column.coeff(static_cast<unsigned>(n)) * factorial(n) / factorial(k);
      v.canonicalize();
      out(n, k) = v;
    }
    column = column * g;
  }
  return out;
}

RationalMatrix production_matrix(const RationalMatrix& lower) {
  const std::size_t size = lower.size();
  if (size == 0) return RationalMatrix(0);
  if (!lower.is_lower_triangular()) throw std::invalid_argument("production_matrix needs a lower-triangular matrix");
  if (lower(0, 0) != 1) throw std::invalid_argument("production_matrix needs L(0,0) = 1");
  for (std::size_t i = 0; i < size; ++i) {
    if (lower(i, i) == 0) throw SingularDiagonal(fmt::format("diagonal entry {} is zero", i));
  }
  // Forward substitution for the inverse.
  RationalMatrix inverse(size);
  for (std::size_t j = 0; j < size; ++j) {
    inverse(j, j) = 1 / lower(j, j);
    for (std::size_t i = j + 1; i < size; ++i) {
      mpq_class sum = 0;
      for (std::size_t m = j; m < i; ++m) sum += lower(i, m) * inverse(m, j);
      inverse(i, j) = -sum / lower(i, i);
    }
  }
  const std::size_t out_size = size - 1;
  RationalMatrix out(out_size);
  for (std::size_t i = 0; i < out_size; ++i) {
    for (std::size_t j = 0; j < out_size; ++j) {
      mpq_class sum = 0;
      for (std::size_t m = 0; m <= i; ++m) sum += inverse(i, m) * lower(m + 1, j);
      out(i, j) = sum;
    }
  }
  return out;
}

ProductionCheck check_exp_riordan_production(const EgfPair& pair, std::size_t size) {
  ProductionCheck out;
  if (size < 3) {
    out.report.fail("need at least a 3 x 3 array");
    return out;
  }
  const RationalMatrix lower = riordan_matrix(pair, size);
  const RationalMatrix p = production_matrix(lower);
  const std::size_t n_max = p.size();  // rows 0..n_max-1

  // p_{n0} = n! z_n and p_{n1} = n! (z_{n-1} + a_n).
  std::vector<mpq_class> z(n_max), a(n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    z[n] = p(n, 0) / factorial(n);
    z[n].canonicalize();
    a[n] = p(n, 1) / factorial(n) - (n > 0 ? z[n - 1] : mpq_class(0));
    a[n].canonicalize();
  }
  auto a_at = [&](long i) { return (i < 0 || i >= static_cast<long>(n_max)) ? mpq_class(0) : a[i]; };
  auto z_at = [&](long i) { return (i < 0 || i >= static_cast<long>(n_max)) ? mpq_class(0) : z[i]; };

  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t k = 0; k < n_max; ++k) {
      const long d = static_cast<long>(n) - static_cast<long>(k);
      // a_{n-k+1} is only known for indices below n_max.
      if (k > 0 && d + 1 >= static_cast<long>(n_max)) continue;
      mpq_class expected = factorial(n) / mpq_class(factorial(k)) * (z_at(d) + static_cast<long>(k) * a_at(d + 1));
      expected.canonicalize();
      if (p(n, k) != expected) {
        out.report.fail(fmt::format("p({},{}) = {} but the A/Z form gives {}", n, k, p(n, k).get_str(),
                                    expected.get_str()));
      }
    }
  }

  out.a_series = RationalSeries(a);
  out.z_series = RationalSeries(z);
  // Both identities hold modulo t^(n_max - 1); G' drops one order.
  const auto order = static_cast<unsigned>(n_max - 1);
  const RationalSeries g = resized(egf_to_ordinary(pair.g), order + 1);
  const RationalSeries f = resized(egf_to_ordinary(pair.f), order + 1);
  const RationalSeries g_trunc = resized(g, order);
  const RationalSeries g_prime = resized(g.derivative(), order);
  const RationalSeries a_of_g = resized(out.a_series, order).compose(g_trunc);
  if (!(resized(a_of_g, order) == g_prime)) out.report.fail("G'(t) differs from A(G(t))");
  const RationalSeries log_derivative = resized(f.derivative(), order) * resized(f, order).inverse();
  const RationalSeries z_of_g = resized(out.z_series, order).compose(g_trunc);
  if (!(resized(z_of_g, order) == resized(log_derivative, order))) out.report.fail("F'/F differs from Z(G(t))");
  if (out.report.pass) {
    out.report.detail = fmt::format("entry formula and both functional equations hold to order {}", order);
  }
  return out;
}

PolyMatrix lah_production(const CoeffSeq& phi, std::size_t size) {
  PolyMatrix out(size);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t k = 0; k <= n + 1 && k < size; ++k) {
      const Poly weight = phi(static_cast<unsigned>(n + 1 - k));
      if (weight.is_zero()) continue;
      out(n, k) = weight * mpz_class(factorial(n + 1) / factorial(k));
    }
  }
  return out;
}

CoeffSeq simple_phi(SimpleFamily family, const SimpleWeights& weights) {
  const Poly unary = family == SimpleFamily::rt ? weights.x2 + weights.y2 + weights.w : weights.x2 + weights.y2;
  return CoeffSeq::table({weights.y1, unary, weights.x1}, 0, 0);
}

JFractionSpec simple_fraction_via_production(SimpleFamily family, const SimpleWeights& weights) {
  const CoeffSeq phi = simple_phi(family, weights);
  const Poly phi0 = phi(0), phi1 = phi(1), phi2 = phi(2);
  auto gamma = [phi1](unsigned n) { return phi1 * mpz_class(n + 1); };
  auto beta = [prod = phi0 * phi2](unsigned n) { return prod * mpz_class(static_cast<unsigned long>(n) * (n + 1)); };
  return {CoeffSeq::rule(gamma, "(n+1) phi_1"), CoeffSeq::rule(beta, "n(n+1) phi_0 phi_2")};
}

CheckReport check_production_route(SimpleFamily family, std::size_t size) {
  CheckReport report;
  const SimpleWeights weights;
  const PolyMatrix output = output_matrix(lah_production(simple_phi(family, weights), size + 1), size);
  const auto moments = expand_j(simple_fraction_via_production(family, weights), static_cast<unsigned>(size - 1));
  // The output matrix starts from 1, while R[G', G] has phi_0 in its corner:
  // both routes produce P_{n+1} / phi_0.
  const Poly& leaf = weights.y1;
  for (std::size_t n = 0; n < size; ++n) {
    const int vertices = static_cast<int>(n + 1);
    const Poly tree_side = family == SimpleFamily::rt ? p_rt(vertices, weights) : p_bt(vertices, weights);
    const Poly from_output = leaf * output(n, 0);
    const Poly from_fraction = leaf * moments[static_cast<unsigned>(n)];
    if (from_output != tree_side) {
      report.fail(fmt::format("y1 * output row {} is {}, trees give {}", n, from_output.str(), tree_side.str()));
    }
    if (from_fraction != tree_side) {
      report.fail(fmt::format("y1 * J-fraction coefficient {} is {}, trees give {}", n, from_fraction.str(),
                              tree_side.str()));
    }
  }
  if (report.pass) report.detail = fmt::format("P_1..P_{} agree three ways", size);
  return report;
}

CheckReport check_irt_from_rt(unsigned order) {
  CheckReport report;
  const Poly z = Poly::symbol("z");
  const std::array<IndexedSymbol, 4> scaled{IndexedSymbol("x1"), IndexedSymbol("x2"), IndexedSymbol("y1"),
                                            IndexedSymbol("y2")};
  Series rhs(order);
  for (unsigned n = 0; n <= order; ++n) {
    const Poly rt = p_rt(static_cast<int>(n));
    for (const auto& term : rt.terms()) {
      unsigned d = 0;
      for (const auto& s : scaled) d += term.mono.exponent_of(s);
      // (1 - zt)^(-d) = sum_k C(d+k-1, k) z^k t^k.
      for (unsigned k = 0; n + k <= order; ++k) {
        mpz_class binom;
        if (d == 0) {
          if (k > 0) break;
          binom = 1;
        } else {
          mpz_bin_uiui(binom.get_mpz_t(), d + k - 1, k);
        }
        rhs[n + k] += Poly(term.mono, term.coeff * binom) * z.pow(k);
      }
    }
  }
  rhs = Series::geometric(order, z) * rhs;
  for (unsigned n = 0; n <= order; ++n) {
    const Poly lhs = p_irt(static_cast<int>(n));
    if (lhs != rhs[n]) report.fail(fmt::format("t^{}: IRT side {} but RT side {}", n, lhs.str(), rhs[n].str()));
  }
  if (report.pass) report.detail = fmt::format("identity holds through t^{}", order);
  return report;
}

template <class Scalar>
std::string to_csv(const TriMatrix<Scalar>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ',';
      out += csv_field(m(i, j));
    }
    out += '\n';
  }
  return out;
}

template std::string to_csv(const RationalMatrix&);
template std::string to_csv(const PolyMatrix&);

}  // namespace tfrac
