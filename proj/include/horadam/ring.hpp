#pragma once

// Exact coefficient arithmetic: polynomials in p, a, b, c, d with
// arbitrary-precision coefficients, Laurent in q.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace horadam {

using Integer = mpz_class;
using Rational = mpq_class;

/// Scalar symbols. The enumerator order is the canonical symbol order used for
/// monomial comparison and for rendering; q comes last so that it prints as a
/// trailing factor (`p*a*q^-1`).
enum class Symbol : std::uint8_t { P, A, B, C, D, Q };

inline constexpr std::size_t kSymbolCount = 6;
inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols = {
    Symbol::P, Symbol::A, Symbol::B, Symbol::C, Symbol::D, Symbol::Q};

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// Raised when an evaluation is requested with q = 0.
class ZeroQ : public std::domain_error {
 public:
  ZeroQ() : std::domain_error("q must be nonzero") {}
};

/// Exponent vector. Only the q exponent may be negative.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Symbol s, int exponent = 1);

  int exponent(Symbol s) const { return exps_[static_cast<std::size_t>(s)]; }
  int degree() const;
  bool is_one() const { return *this == Monomial{}; }

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;

  /// Graded-lexicographic: higher total degree first, then lexicographic on
  /// the canonical symbol order. Returns `less` when *this sorts first.
  std::strong_ordering operator<=>(const Monomial& o) const;

  /// `p*a^2*q^-1`; empty string for the unit monomial.
  std::string str() const;
  /// Same, but with `q^(-1)` so the text parses as an identity-file expression.
  std::string dsl() const;

 private:
  std::array<int, kSymbolCount> exps_{};
};

/// Total assignment of rationals to every scalar symbol.
struct Assignment {
  std::array<Rational, kSymbolCount> values{};

  Rational& operator[](Symbol s) { return values[static_cast<std::size_t>(s)]; }
  const Rational& operator[](Symbol s) const { return values[static_cast<std::size_t>(s)]; }
};

/// Partial assignment used when pinning scalars.
using Pins = std::map<Symbol, Rational>;

Rational rational_pow(const Rational& base, int exponent);

/// Finite map Monomial -> coefficient with no stored zeros. Values are
/// immutable in practice: every operation returns a fresh polynomial.
template <class Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  Poly() = default;
  Poly(long c) { add_term(Monomial{}, Coeff(c)); }  // NOLINT(implicit)
  explicit Poly(const Coeff& c) { add_term(Monomial{}, c); }
  Poly(const Monomial& m, const Coeff& c) { add_term(m, c); }

  static Poly symbol(Symbol s, int exponent = 1) { return Poly(Monomial::of(s, exponent), Coeff(1)); }
  static Poly q_power(int exponent) { return symbol(Symbol::Q, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the unit monomial.
  Coeff constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// True for +-q^k, the units of the ring.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    if (c != 1 && c != -1) return false;
    for (Symbol s : kAllSymbols)
      if (s != Symbol::Q && m.exponent(s) != 0) return false;
    return true;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g) {
    Poly r;
    for (const auto& [m1, c1] : f.terms_)
      for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, Coeff(c1 * c2));
    return r;
  }
  friend bool operator==(const Poly& f, const Poly& g) { return f.terms_ == g.terms_; }

  friend Poly pow(const Poly& f, unsigned k) {
    Poly result(1L);
    Poly base = f;
    while (k != 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return result;
  }

  Rational evaluate(const Assignment& at) const {
    if (at[Symbol::Q] == 0) throw ZeroQ();
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = Rational(c);
      for (Symbol s : kAllSymbols)
        if (int e = m.exponent(s); e != 0) term *= rational_pow(at[s], e);
      total += term;
    }
    return total;
  }

  /// Substitutes the pinned symbols, keeping the rest symbolic.
  Poly<Rational> specialize(const Pins& pins) const {
    if (auto it = pins.find(Symbol::Q); it != pins.end() && it->second == 0) throw ZeroQ();
    Poly<Rational> out;
    for (const auto& [m, c] : terms_) {
      Rational coeff = Rational(c);
      Monomial rest;
      for (Symbol s : kAllSymbols) {
        int e = m.exponent(s);
        if (e == 0) continue;
        if (auto it = pins.find(s); it != pins.end())
          coeff *= rational_pow(it->second, e);
        else
          rest = rest * Monomial::of(s, e);
      }
      out += Poly<Rational>(rest, coeff);
    }
    return out;
  }

  /// Canonical text: descending graded-lex order, explicit signs, `q^-1`.
  std::string str() const { return render(false); }
  /// Text that reparses as an identity-file scalar expression.
  std::string dsl() const { return render(true); }

 private:
  void add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string render(bool dsl) const;

  // std::map sorts ascending; Monomial's ordering puts the leading term first.
  Terms terms_;
};

using LaurentPoly = Poly<Integer>;
using RationalPoly = Poly<Rational>;

extern template class Poly<Integer>;
extern template class Poly<Rational>;

}  // namespace horadam
