// SPDX-License-Identifier: MIT
#include "tfrac/continued_fraction.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "tfrac/rational_series.hpp"

namespace tfrac {

CoeffSeq::CoeffSeq() : CoeffSeq([](unsigned) { return Poly(); }, "zero") {}

CoeffSeq::CoeffSeq(Rule r, std::string description)
    : rule_(std::move(r)), description_(std::move(description)) {}

CoeffSeq CoeffSeq::rule(Rule r, std::string description) {
  return CoeffSeq(std::move(r), std::move(description));
}

CoeffSeq CoeffSeq::table(std::vector<Poly> values, Poly fallback, unsigned first_index) {
  auto shared = std::make_shared<const std::vector<Poly>>(std::move(values));
  return CoeffSeq(
      [shared, fallback = std::move(fallback), first_index](unsigned i) {
        if (i >= first_index && i - first_index < shared->size()) return (*shared)[i - first_index];
        return fallback;
      },
      "table");
}

CoeffSeq CoeffSeq::constant(Poly value) {
  return CoeffSeq([value = std::move(value)](unsigned) { return value; }, "constant");
}

QuasiAffineSpec QuasiAffineSpec::from_tuple(const std::vector<long>& v) {
  if (v.size() != 8) throw std::invalid_argument("quasi-affine tuple needs 8 values (x,y,u,v,a,b,c,d)");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

TFractionSpec quasi_affine(const QuasiAffineSpec& s) {
  auto alpha = [s](unsigned i) {
    const long k = (i + 1) / 2;
    return (i % 2 == 1) ? s.x + s.u * mpz_class(k - 1) : s.y + s.v * mpz_class(k - 1);
  };
  auto delta = [s](unsigned i) {
    const long k = (i + 1) / 2;
    return (i % 2 == 1) ? s.a + s.c * mpz_class(k - 1) : s.b + s.d * mpz_class(k - 1);
  };
  return {CoeffSeq::rule(alpha, "quasi-affine alpha"), CoeffSeq::rule(delta, "quasi-affine delta")};
}

Series expand_t(const TFractionSpec& spec, unsigned order) { return expand_t(spec, order, order); }

Series expand_t(const TFractionSpec& spec, unsigned order, unsigned depth) {
  // Level k (1-based) is only needed to order N - (k - 1); below the depth the
  // tail is replaced by 1.
  const unsigned levels = std::max(depth, 1U);
  Series tail = Series::one(order >= levels ? order - levels : 0);
  for (unsigned k = levels; k >= 1; --k) {
    const unsigned local = order >= k - 1 ? order - (k - 1) : 0;
    Series denom = Series::one(local);
    if (local >= 1) {
      denom[1] -= spec.delta(k);
      const Poly a = spec.alpha(k);
      if (!a.is_zero()) {
        const Series t_tail = tail.truncated(local).shifted();
        for (unsigned n = 1; n <= local; ++n) denom[n] -= a * t_tail[n];
      }
    }
    tail = series_inverse(denom);
  }
  return tail.truncated(order);
}

Series expand_j(const JFractionSpec& spec, unsigned order) { return expand_j(spec, order, order / 2 + 1); }

Series expand_j(const JFractionSpec& spec, unsigned order, unsigned depth) {
  // Levels k = 0 .. depth-1; level k needs order N - 2k.
  const unsigned levels = std::max(depth, 1U);
  auto local_order = [order](unsigned k) { return order >= 2 * k ? order - 2 * k : 0; };
  Series tail = Series::one(local_order(levels));
  for (unsigned k = levels; k-- > 0;) {
    const unsigned local = local_order(k);
    Series denom = Series::one(local);
    if (local >= 1) denom[1] -= spec.gamma(k);
    if (local >= 2) {
      const Poly b = spec.beta(k + 1);
      if (!b.is_zero()) {
        const Series shifted = tail.truncated(local).shifted().shifted();
        for (unsigned n = 2; n <= local; ++n) denom[n] -= b * shifted[n];
      }
    }
    tail = series_inverse(denom);
  }
  return tail.truncated(order);
}

Series expand_s(const SFractionSpec& spec, unsigned order) {
  return expand_t(TFractionSpec{spec.alpha, CoeffSeq()}, order);
}

Series expand_t_series(const SeriesCoeffs& alpha, const SeriesCoeffs& delta, unsigned order) {
  const unsigned levels = std::max(order, 1U);
  Series tail = Series::one(order >= levels ? order - levels : 0);
  for (unsigned k = levels; k >= 1; --k) {
    const unsigned local = order >= k - 1 ? order - (k - 1) : 0;
    Series denom = Series::one(local);
    if (local >= 1) {
      denom -= delta(k, local).shifted();
      denom -= (alpha(k, local) * tail.truncated(local)).shifted();
    }
    tail = series_inverse(denom);
  }
  return tail.truncated(order);
}

OddContraction odd_contract(const TFractionSpec& spec, unsigned probe_order) {
  for (unsigned k = 1; 2 * k - 1 <= 2 * probe_order + 1; ++k) {
    if (!spec.delta(2 * k - 1).is_zero()) {
      throw OddDeltaNonzero(fmt::format("odd_contract: delta_{} = {} is nonzero", 2 * k - 1,
                                        spec.delta(2 * k - 1).str()));
    }
  }
  auto gamma = [spec](unsigned n) {
    return spec.alpha(2 * n + 1) + spec.alpha(2 * n + 2) + spec.delta(2 * n + 2);
  };
  auto beta = [spec](unsigned n) { return spec.alpha(2 * n) * spec.alpha(2 * n + 1); };
  return {spec.alpha(1),
          JFractionSpec{CoeffSeq::rule(gamma, "contracted gamma"), CoeffSeq::rule(beta, "contracted beta")}};
}

TFractionSpec insert_odd_delta(const CoeffSeq& alpha, const CoeffSeq& delta_even,
                               const CoeffSeq& delta_odd) {
  auto delta = [delta_even, delta_odd](unsigned i) {
    return (i % 2 == 1) ? delta_odd(i) : delta_even(i);
  };
  return {alpha, CoeffSeq::rule(delta, "merged delta")};
}

Series transformed_expansion(const CoeffSeq& alpha, const CoeffSeq& delta_even,
                             const CoeffSeq& delta_odd, unsigned order) {
  // alpha_{2k-1} / (1 - delta_{2k-1} t) and alpha_{2k} / (1 - delta_{2k+1} t).
  SeriesCoeffs a = [&](unsigned i, unsigned local) {
    const unsigned odd_index = (i % 2 == 1) ? i : i + 1;
    return Series::geometric(local, delta_odd(odd_index)).scaled(alpha(i));
  };
  SeriesCoeffs d = [&](unsigned i, unsigned local) {
    return Series::constant(local, (i % 2 == 0) ? delta_even(i) : Poly());
  };
  return Series::geometric(order, delta_odd(1)) * expand_t_series(a, d, order);
}

JFractionSpec RationalJFraction::to_spec() const {
  auto integral = [](const std::vector<mpq_class>& v) {
    std::vector<Poly> out;
    for (const auto& q : v) {
      if (q.get_den() != 1) throw std::domain_error("J-fraction coefficient " + q.get_str() + " is not an integer");
      out.emplace_back(q.get_num());
    }
    return out;
  };
  return {CoeffSeq::table(integral(gamma), 0, 0), CoeffSeq::table(integral(beta), 0, 1)};
}

RationalJFraction series_to_jfraction(const Series& s, unsigned depth) {
  RationalSeries current = RationalSeries::from_integer_series(s);
  if (current.coeff(0) != 1) throw NonUnitConstantTerm("series_to_jfraction: constant term must be 1");
  RationalJFraction out;
  for (unsigned k = 0; k < depth; ++k) {
    // current = 1 / (1 - gamma t - beta t^2 * next)
    if (current.order() < 1) break;
    const RationalSeries u = current.inverse();
    out.gamma.push_back(-u.coeff(1));
    if (u.order() < 2) break;
    // residual = beta * next = -(u_2 + u_3 t + ...)
    RationalSeries residual(u.order() - 2);
    for (unsigned n = 0; n <= residual.order(); ++n) residual.coeff(n) = -u.coeff(n + 2);
    const mpq_class beta = residual.coeff(0);
    if (beta == 0) {
      if (residual.is_zero()) {
        out.terminated = true;
        return out;
      }
      throw TerminatingFraction(fmt::format("series_to_jfraction: beta_{} vanishes but the residual does not", k + 1));
    }
    out.beta.push_back(beta);
    current = residual.scaled(1 / beta);
  }
  return out;
}

std::vector<Poly> tabulate(const CoeffSeq& seq, unsigned first, unsigned last) {
  std::vector<Poly> out;
  for (unsigned i = first; i <= last; ++i) out.push_back(seq(i));
  return out;
}

}  // namespace tfrac
