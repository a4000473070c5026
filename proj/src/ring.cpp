#include "horadam/ring.hpp"

#include <cstdlib>

namespace horadam {

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::P: return "p";
    case Symbol::A: return "a";
    case Symbol::B: return "b";
    case Symbol::C: return "c";
    case Symbol::D: return "d";
    case Symbol::Q: return "q";
  }
  return "?";
}

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (Symbol s : kAllSymbols)
    if (symbol_name(s) == name) return s;
  return std::nullopt;
}

Monomial Monomial::of(Symbol s, int exponent) {
  if (exponent < 0 && s != Symbol::Q)
    throw std::invalid_argument("only q may carry a negative exponent");
  Monomial m;
  m.exps_[static_cast<std::size_t>(s)] = exponent;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kSymbolCount; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto d = degree() <=> o.degree(); d != 0) return 0 <=> d;
  for (std::size_t i = 0; i < kSymbolCount; ++i)
    if (exps_[i] != o.exps_[i]) return o.exps_[i] <=> exps_[i];
  return std::strong_ordering::equal;
}

namespace {

std::string render_monomial(const Monomial& m, bool dsl) {
  std::string out;
  for (Symbol s : kAllSymbols) {
    int e = m.exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += symbol_name(s);
    if (e == 1) continue;
    if (e < 0 && dsl)
      out += "^(" + std::to_string(e) + ")";
    else
      out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Monomial::str() const { return render_monomial(*this, false); }
std::string Monomial::dsl() const { return render_monomial(*this, true); }

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent == 0) return 1;
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw ZeroQ();
    b = 1 / b;
  }
  unsigned long k = static_cast<unsigned long>(std::abs(exponent));
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

template <class Coeff>
std::string Poly<Coeff>::render(bool dsl) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Coeff magnitude = negative ? Coeff(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = render_monomial(m, dsl);
    if (mono.empty())
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += mono;
    else
      out += magnitude.get_str() + "*" + mono;
  }
  return out;
}

template class Poly<Integer>;
template class Poly<Rational>;

}  // namespace horadam
