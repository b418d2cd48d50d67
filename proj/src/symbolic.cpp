// SPDX-License-Identifier: MIT
#include "tfrac/symbolic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace tfrac {

// ---------------------------------------------------------------- symbols

namespace {

void check_base(std::string_view base) {
  if (base.empty() || base.size() > IndexedSymbol::kMaxBase) {
    throw std::invalid_argument(fmt::format("symbol base '{}' must have 1..{} characters", base,
                                            IndexedSymbol::kMaxBase));
  }
  if (!std::isalpha(static_cast<unsigned char>(base.front()))) {
    throw std::invalid_argument(fmt::format("symbol base '{}' must start with a letter", base));
  }
  for (char ch : base) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      throw std::invalid_argument(fmt::format("symbol base '{}' has an invalid character", base));
    }
  }
}

std::uint16_t narrow_index(unsigned i) {
  if (i > std::numeric_limits<std::uint16_t>::max()) {
    throw std::out_of_range("symbol index too large");
  }
  return static_cast<std::uint16_t>(i);
}

}  // namespace

IndexedSymbol::IndexedSymbol(std::string_view base) {
  check_base(base);
  std::copy(base.begin(), base.end(), base_.begin());
  base_len_ = static_cast<std::uint8_t>(base.size());
}

IndexedSymbol::IndexedSymbol(std::string_view base, unsigned i) : IndexedSymbol(base) {
  arity_ = 1;
  idx_[0] = narrow_index(i);
}

IndexedSymbol::IndexedSymbol(std::string_view base, unsigned i, unsigned j) : IndexedSymbol(base) {
  arity_ = 2;
  idx_[0] = narrow_index(i);
  idx_[1] = narrow_index(j);
}

std::string IndexedSymbol::str() const {
  switch (arity_) {
    case 0:
      return std::string(base());
    case 1:
      return fmt::format("{}({})", base(), idx_[0]);
    default:
      return fmt::format("{}({},{})", base(), idx_[0], idx_[1]);
  }
}

bool operator==(const IndexedSymbol& a, const IndexedSymbol& b) noexcept {
  return a.base() == b.base() && a.arity_ == b.arity_ && a.idx_ == b.idx_;
}

std::strong_ordering operator<=>(const IndexedSymbol& a, const IndexedSymbol& b) noexcept {
  if (auto c = a.base().compare(b.base()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

// --------------------------------------------------------------- monomials

Monomial::Monomial(const IndexedSymbol& s, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(s, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (auto& [sym, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == sym) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(sym, e);
    }
  }
  return m;
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent_of(const IndexedSymbol& s) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), s,
                             [](const Factor& f, const IndexedSymbol& key) { return f.first < key; });
  return (it != factors_.end() && it->first == s) ? it->second : 0;
}

Monomial Monomial::without_one(const IndexedSymbol& s) const {
  Monomial m = *this;
  auto it = std::find_if(m.factors_.begin(), m.factors_.end(),
                         [&](const Factor& f) { return f.first == s; });
  if (it == m.factors_.end()) throw std::invalid_argument("symbol does not divide monomial");
  if (--it->second == 0) m.factors_.erase(it);
  return m;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [sym, e] : factors_) {
    if (!out.empty()) out += '*';
    out += sym.str();
    if (e != 1) out += fmt::format("^{}", e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.factors_[k].first <=> b.factors_[k].first; c != 0) return c;
    // Higher power of an earlier symbol sorts first (so x^2 < x*y).
    if (auto c = b.factors_[k].second <=> a.factors_[k].second; c != 0) return c;
  }
  return a.factors_.size() <=> b.factors_.size();
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long value) {
  if (value != 0) terms_.push_back({Monomial{}, mpz_class(value)});
}

Poly::Poly(const mpz_class& value) {
  if (value != 0) terms_.push_back({Monomial{}, value});
}

Poly::Poly(const Monomial& m, const mpz_class& coeff) {
  if (coeff != 0) terms_.push_back({m, coeff});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.mono < y.mono; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

mpz_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

mpz_class Poly::to_integer() const {
  if (!is_constant()) throw std::domain_error("polynomial '" + str() + "' is not a constant");
  return constant_term();
}

mpz_class Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : mpz_class(0);
}

std::uint32_t Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().mono.degree();
}

std::vector<IndexedSymbol> Poly::symbols() const {
  std::vector<IndexedSymbol> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = 1;
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    const mpz_class magnitude = abs(coeff);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += mono.str();
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->mono < j->mono) {
      merged.push_back(std::move(*i++));
    } else if (j->mono < i->mono) {
      merged.push_back(*j++);
    } else {
      mpz_class c = i->coeff + j->coeff;
      if (c != 0) merged.push_back({std::move(i->mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  std::move(i, terms_.end(), std::back_inserter(merged));
  merged.insert(merged.end(), j, o.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  std::vector<Poly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) products.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return Poly::from_terms(std::move(products));
}

Poly operator*(Poly a, const mpz_class& c) {
  if (c == 0) return {};
  for (auto& t : a.terms_) t.coeff *= c;
  return a;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse_all() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

  IndexedSymbol symbol_only() {
    skip_space();
    IndexedSymbol s = symbol();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after symbol");
    return s;
  }

 private:
  [[noreturn]] void fail(std::string_view what) const {
    throw ParseError(fmt::format("{} at offset {} in '{}'", what, pos_, text_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned number() {
    skip_space();
    const auto* begin = text_.data() + pos_;
    const auto* end = text_.data() + text_.size();
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  IndexedSymbol symbol() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view base = text_.substr(start, pos_ - start);
    if (base.empty()) fail("expected a symbol");
    try {
      if (!accept('(')) return IndexedSymbol(base);
      const unsigned i = number();
      if (accept(')')) return IndexedSymbol(base, i);
      if (!accept(',')) fail("expected ',' or ')' in symbol indices");
      const unsigned j = number();
      if (!accept(')')) fail("expected ')' after symbol indices");
      return IndexedSymbol(base, i, j);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    } catch (const std::out_of_range& e) {
      fail(e.what());
    }
  }

  Poly expression() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = signed_power();
    while (accept('*')) acc = acc * signed_power();
    return acc;
  }

  // A sign applies to the whole power, so -x^2 is -(x^2).
  Poly signed_power() {
    if (accept('-')) return -signed_power();
    if (accept('+')) return signed_power();
    Poly base = primary();
    if (accept('^')) return base.pow(number());
    return base;
  }

  Poly primary() {
    if (accept('(')) {
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    return Poly::symbol(symbol());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

IndexedSymbol IndexedSymbol::parse(std::string_view text) { return PolyParser(text).symbol_only(); }

// ------------------------------------------------------------- accumulator

void PolyAccumulator::add(const Monomial& m, const mpz_class& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const Poly& p) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolyAccumulator::merge(const PolyAccumulator& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
}

Poly PolyAccumulator::to_poly() const {
  std::vector<Poly::Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    if (c != 0) terms.push_back({m, c});
  }
  return Poly::from_terms(std::move(terms));
}

// ---------------------------------------------------------- specialization

Poly specialize(const Poly& p, const SymbolResolver& resolver) {
  std::map<IndexedSymbol, std::optional<Poly>> cache;
  auto lookup = [&](const IndexedSymbol& s) -> const std::optional<Poly>& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, resolver(s)).first;
    return it->second;
  };
  std::vector<Poly::Term> kept;
  Poly replaced;
  for (const auto& [mono, coeff] : p.terms()) {
    Poly factor(coeff);
    std::vector<Monomial::Factor> untouched;
    for (const auto& [sym, e] : mono.factors()) {
      const auto& value = lookup(sym);
      if (value) {
        factor = factor * value->pow(e);
      } else {
        untouched.emplace_back(sym, e);
      }
    }
    if (untouched.size() == mono.factors().size()) {
      kept.push_back({mono, coeff});
    } else {
      replaced += factor * Poly(Monomial::from_factors(std::move(untouched)), 1);
    }
  }
  return Poly::from_terms(std::move(kept)) + replaced;
}

Poly specialize(const Poly& p, const Substitution& assignment) {
  return specialize(p, [&](const IndexedSymbol& s) -> std::optional<Poly> {
    auto it = assignment.find(s);
    if (it == assignment.end()) return std::nullopt;
    return it->second;
  });
}

SymbolResolver family_resolver(std::map<std::string, Poly, std::less<>> by_base) {
  return [by_base = std::move(by_base)](const IndexedSymbol& s) -> std::optional<Poly> {
    auto it = by_base.find(s.base());
    if (it == by_base.end()) return std::nullopt;
    return it->second;
  };
}

mpz_class PrimeValuation::value(const IndexedSymbol& s) const {
  std::lock_guard lock(mutex_);
  auto it = assigned_.find(s);
  if (it != assigned_.end()) return it->second;
  mpz_nextprime(last_prime_.get_mpz_t(), last_prime_.get_mpz_t());
  assigned_.emplace(s, last_prime_);
  return last_prime_;
}

SymbolResolver PrimeValuation::resolver() const {
  return [this](const IndexedSymbol& s) -> std::optional<Poly> { return Poly(value(s)); };
}

// ------------------------------------------------------------------ Series

Series::Series(unsigned order) : order_(order), coeffs_(order + 1) {}

Series::Series(unsigned order, std::vector<Poly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

Series Series::constant(unsigned order, const Poly& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(unsigned order, const Poly& c, unsigned k) {
  Series s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

Series Series::geometric(unsigned order, const Poly& c) {
  Series s(order);
  Poly power = 1;
  for (unsigned n = 0; n <= order; ++n) {
    s.coeffs_[n] = power;
    if (n < order) power = power * c;
  }
  return s;
}

Series Series::truncated(unsigned order) const {
  std::vector<Poly> c(coeffs_.begin(), coeffs_.begin() + std::min(order, order_) + 1);
  return Series(order, std::move(c));
}

Series Series::shifted() const {
  Series s(order_);
  for (unsigned n = 1; n <= order_; ++n) s.coeffs_[n] = coeffs_[n - 1];
  return s;
}

Series Series::scaled(const Poly& c) const {
  Series s(order_);
  for (unsigned n = 0; n <= order_; ++n) s.coeffs_[n] = coeffs_[n] * c;
  return s;
}

Series Series::map(const std::function<Poly(const Poly&)>& f) const {
  Series s(order_);
  for (unsigned n = 0; n <= order_; ++n) s.coeffs_[n] = f(coeffs_[n]);
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
  for (unsigned n = 0; n <= order_; ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
  for (unsigned n = 0; n <= order_; ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series orders differ");
  Series s(a.order_);
  for (unsigned n = 0; n <= a.order_; ++n) {
    if (a.coeffs_[n].is_zero()) continue;
    for (unsigned m = 0; n + m <= a.order_; ++m) {
      if (!b.coeffs_[m].is_zero()) s.coeffs_[n + m] += a.coeffs_[n] * b.coeffs_[m];
    }
  }
  return s;
}

bool operator==(const Series& a, const Series& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Series series_inverse(const Series& s) {
  if (!(s[0] == Poly(1))) {
    throw NonUnitConstantTerm("series_inverse: constant term is '" + s[0].str() + "', expected 1");
  }
  Series g(s.order());
  g[0] = 1;
  for (unsigned n = 1; n <= s.order(); ++n) {
    Poly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (!s[k].is_zero() && !g[n - k].is_zero()) acc += s[k] * g[n - k];
    }
    g[n] = -acc;
  }
  return g;
}

std::vector<mpz_class> integer_coefficients(const Series& s) {
  std::vector<mpz_class> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(c.to_integer());
  return out;
}

}  // namespace tfrac
