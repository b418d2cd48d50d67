// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tfrac {

/// Error raised by Poly::parse on malformed text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by series_inverse when the constant term is not the integer 1.
class NonUnitConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An indeterminate such as `x1`, `mu(3)` or `a(2,1)`.
///
/// The base name is stored inline (at most 7 characters) so that symbols are
/// trivially copyable; comparison is lexicographic on (base, indices).
class IndexedSymbol {
 public:
  static constexpr std::size_t kMaxBase = 7;

  explicit IndexedSymbol(std::string_view base);
  IndexedSymbol(std::string_view base, unsigned i);
  IndexedSymbol(std::string_view base, unsigned i, unsigned j);

  [[nodiscard]] std::string_view base() const noexcept { return {base_.data(), base_len_}; }
  [[nodiscard]] std::span<const std::uint16_t> indices() const noexcept {
    return {idx_.data(), arity_};
  }
  [[nodiscard]] unsigned arity() const noexcept { return arity_; }
  [[nodiscard]] unsigned index(unsigned k) const { return idx_.at(k); }

  /// Text form: `b`, `b(i)` or `b(i,j)`.
  [[nodiscard]] std::string str() const;
  static IndexedSymbol parse(std::string_view text);

  friend bool operator==(const IndexedSymbol& a, const IndexedSymbol& b) noexcept;
  friend std::strong_ordering operator<=>(const IndexedSymbol& a, const IndexedSymbol& b) noexcept;

 private:
  std::array<char, kMaxBase> base_{};
  std::uint8_t base_len_ = 0;
  std::uint8_t arity_ = 0;
  std::array<std::uint16_t, 2> idx_{};
};

/// Product of symbol powers; exponents are positive, the empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<IndexedSymbol, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const IndexedSymbol& s, std::uint32_t exponent = 1);
  /// Builds from arbitrary factors; merges duplicates and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  [[nodiscard]] std::span<const Factor> factors() const noexcept { return factors_; }
  [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
  [[nodiscard]] std::uint32_t degree() const noexcept;
  [[nodiscard]] std::uint32_t exponent_of(const IndexedSymbol& s) const noexcept;
  /// This monomial with one power of `s` removed; `s` must divide it.
  [[nodiscard]] Monomial without_one(const IndexedSymbol& s) const;
  [[nodiscard]] std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded order: total degree first, then lexicographic on factors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Factor> factors_;  // sorted by symbol, exponents > 0
};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by monomial with no zero coefficients, so equality is
/// structural and printing is deterministic.
class Poly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
  };

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor): integers promote to constants
  Poly(const mpz_class& value);  // NOLINT(google-explicit-constructor)
  static Poly symbol(const IndexedSymbol& s) { return Poly(Monomial(s), 1); }
  static Poly symbol(std::string_view base) { return symbol(IndexedSymbol(base)); }
  static Poly symbol(std::string_view base, unsigned i) { return symbol(IndexedSymbol(base, i)); }
  static Poly symbol(std::string_view base, unsigned i, unsigned j) {
    return symbol(IndexedSymbol(base, i, j));
  }
  Poly(const Monomial& m, const mpz_class& coeff);

  /// Builds from unsorted terms; combines duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept;
  /// Coefficient of the unit monomial.
  [[nodiscard]] mpz_class constant_term() const;
  /// The integer value of a constant polynomial; throws if not constant.
  [[nodiscard]] mpz_class to_integer() const;
  [[nodiscard]] mpz_class coefficient(const Monomial& m) const;
  [[nodiscard]] std::uint32_t total_degree() const noexcept;
  [[nodiscard]] std::vector<IndexedSymbol> symbols() const;
  [[nodiscard]] Poly pow(unsigned e) const;

  /// Canonical text form, e.g. `x1^2*y1 + 3*a(0,1) - 2`.
  [[nodiscard]] std::string str() const;
  /// Parses `+ - * ^`, parentheses, integers and symbols.
  static Poly parse(std::string_view text);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& c);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Accumulates many (monomial, coefficient) contributions; cheaper than
/// repeated Poly additions when summing over large enumerations.
class PolyAccumulator {
 public:
  void add(const Monomial& m, const mpz_class& c = 1);
  void add(const Poly& p);
  void merge(const PolyAccumulator& other);
  [[nodiscard]] Poly to_poly() const;

 private:
  std::map<Monomial, mpz_class> terms_;
};

/// Resolves a symbol to its replacement, or nullopt to keep it.
using SymbolResolver = std::function<std::optional<Poly>(const IndexedSymbol&)>;
using Substitution = std::map<IndexedSymbol, Poly>;

Poly specialize(const Poly& p, const Substitution& assignment);
Poly specialize(const Poly& p, const SymbolResolver& resolver);

/// Resolver that maps every symbol whose base appears in `by_base` to the
/// given value, regardless of indices (e.g. all `a(l,l')` to `x1`).
SymbolResolver family_resolver(std::map<std::string, Poly, std::less<>> by_base);

/// Assigns a distinct prime to each symbol on first request; used as a
/// high-confidence surrogate for symbolic identity at larger orders.
/// Thread-safe; all calls on one instance are mutually consistent.
class PrimeValuation {
 public:
  [[nodiscard]] mpz_class value(const IndexedSymbol& s) const;
  [[nodiscard]] SymbolResolver resolver() const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<IndexedSymbol, mpz_class> assigned_;
  mutable mpz_class last_prime_ = 1;
};

/// Truncated power series in t with Poly coefficients, exact modulo t^(N+1).
class Series {
 public:
  explicit Series(unsigned order);
  Series(unsigned order, std::vector<Poly> coeffs);
  static Series one(unsigned order) { return constant(order, 1); }
  static Series constant(unsigned order, const Poly& c);
  /// c * t^k (zero when k exceeds the order).
  static Series monomial(unsigned order, const Poly& c, unsigned k);
  /// 1 / (1 - c t) expanded to the given order.
  static Series geometric(unsigned order, const Poly& c);

  [[nodiscard]] unsigned order() const noexcept { return order_; }
  [[nodiscard]] const Poly& operator[](unsigned n) const { return coeffs_.at(n); }
  [[nodiscard]] Poly& operator[](unsigned n) { return coeffs_.at(n); }
  [[nodiscard]] std::span<const Poly> coeffs() const noexcept { return coeffs_; }
  /// Same series viewed at a (usually smaller) order; extends with zeros.
  [[nodiscard]] Series truncated(unsigned order) const;
  /// Multiplies by t.
  [[nodiscard]] Series shifted() const;
  [[nodiscard]] Series scaled(const Poly& c) const;
  [[nodiscard]] Series map(const std::function<Poly(const Poly&)>& f) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);

 private:
  unsigned order_;
  std::vector<Poly> coeffs_;
};

/// Multiplicative inverse; requires constant term exactly 1.
Series series_inverse(const Series& s);

/// Converts integer-valued constant coefficients to a vector; throws if any
/// coefficient contains a symbol.
std::vector<mpz_class> integer_coefficients(const Series& s);

}  // namespace tfrac
