#include "horadam/cfinite.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace horadam {

Annihilator::Annihilator(UPoly coefficients) : coeffs_(std::move(coefficients)) {
  upoly_trim(coeffs_);
  if (coeffs_.size() < 2) throw std::invalid_argument("annihilator must have order >= 1");
  if (coeffs_.back() != LaurentPoly(1)) throw std::invalid_argument("annihilator must be monic");
}

Annihilator Annihilator::geometric(const LaurentPoly& ratio) {
  return Annihilator(UPoly{-ratio, LaurentPoly(1)});
}

std::string Annihilator::str() const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const LaurentPoly& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string power = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    std::string text = c.str();
    // The sign of the leading term is pulled out front.
    const bool negative = c.terms().begin()->second < 0;
    if (negative) text = (-c).str();
    if (c.size() > 1)
      text = "(" + text + ")";
    else if (text == "1" && !power.empty())
      text.clear();
    std::string term = text;
    if (!power.empty()) term = text.empty() ? power : text + "*" + power;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

namespace {

// product() is the expensive closure operation and the prover asks for the
// same pairs repeatedly, so results are memoized. Entries are write-once.
std::mutex product_cache_mutex;
std::map<std::pair<std::string, std::string>, Annihilator> product_cache;

}  // namespace

Annihilator product(const Annihilator& a, const Annihilator& b) {
  if (a.order() == 1 && a.constant_term() == LaurentPoly(-1)) return b;
  if (b.order() == 1 && b.constant_term() == LaurentPoly(-1)) return a;

  auto key = std::make_pair(a.str(), b.str());
  if (key.second < key.first) std::swap(key.first, key.second);
  {
    std::lock_guard lock(product_cache_mutex);
    if (auto it = product_cache.find(key); it != product_cache.end()) return it->second;
  }
  Annihilator result(charpoly(kronecker(companion(a.coefficients()), companion(b.coefficients()))));
  std::lock_guard lock(product_cache_mutex);
  product_cache.try_emplace(key, result);
  return result;
}

Annihilator sum(const Annihilator& a, const Annihilator& b) {
  if (a == b) return a;
  return Annihilator(upoly_mul(a.coefficients(), b.coefficients()));
}

Annihilator symmetric_square(const Annihilator& a) {
  if (a.order() != 2)
    throw OrderMismatch("symmetric_square needs an order-2 annihilator, got order " +
                        std::to_string(a.order()));
  const LaurentPoly trace = -a.coefficients()[1];
  const LaurentPoly& det = a.coefficients()[0];
  const LaurentPoly trace2 = trace * trace;
  return Annihilator(UPoly{-(det * det * det), trace2 * det - det * det, -(trace2 - det), LaurentPoly(1)});
}

bool annihilates(const Annihilator& a, std::span<const LaurentPoly> terms) {
  const std::size_t d = a.order();
  if (terms.size() < d + 1)
    throw ShortList("need at least " + std::to_string(d + 1) + " terms, got " + std::to_string(terms.size()));
  for (std::size_t n = 0; n + d < terms.size(); ++n) {
    LaurentPoly acc;
    for (std::size_t t = 0; t <= d; ++t) acc += a.coefficients()[t] * terms[n + t];
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool annihilates(const Annihilator& a, std::span<const Rational> terms, const Assignment& at) {
  const std::size_t d = a.order();
  if (terms.size() < d + 1)
    throw ShortList("need at least " + std::to_string(d + 1) + " terms, got " + std::to_string(terms.size()));
  std::vector<Rational> coeffs;
  coeffs.reserve(d + 1);
  for (const auto& c : a.coefficients()) coeffs.push_back(c.evaluate(at));
  for (std::size_t n = 0; n + d < terms.size(); ++n) {
    Rational acc = 0;
    for (std::size_t t = 0; t <= d; ++t) acc += coeffs[t] * terms[n + t];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace horadam
