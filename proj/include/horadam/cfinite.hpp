#pragma once

// Annihilator closure algebra for C-finite sequences.

#include <span>
#include <stdexcept>
#include <string>

#include "horadam/matrix.hpp"
#include "horadam/ring.hpp"

namespace horadam {

class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShortList : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monic characteristic polynomial x^d + c_{d-1} x^{d-1} + ... + c_0 of a
/// linear recurrence sum_t c_t X(n+t) = 0 (with c_d = 1).
class Annihilator {
 public:
  /// Coefficients low to high; the last one must be 1 and the degree >= 1.
  explicit Annihilator(UPoly coefficients);

  /// x - r, the annihilator of the geometric sequence with ratio r.
  static Annihilator geometric(const LaurentPoly& ratio);
  static Annihilator constant() { return geometric(LaurentPoly(1)); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const UPoly& coefficients() const { return coeffs_; }
  const LaurentPoly& constant_term() const { return coeffs_.front(); }
  bool has_unit_constant_term() const { return constant_term().is_unit(); }

  /// `x^2 - p*x + q`; multi-term coefficients are parenthesized.
  std::string str() const;

  bool operator==(const Annihilator&) const = default;

 private:
  UPoly coeffs_;
};

/// Annihilates pointwise products: characteristic polynomial of the
/// Kronecker product of the two companion matrices.
Annihilator product(const Annihilator& a, const Annihilator& b);

/// Annihilates sums: the polynomial product, or `a` itself when a == b.
Annihilator sum(const Annihilator& a, const Annihilator& b);

/// Order-3 annihilator of all products of two sequences sharing the order-2
/// annihilator x^2 - P x + Q: x^3 - (P^2 - Q) x^2 + (P^2 Q - Q^2) x - Q^3.
Annihilator symmetric_square(const Annihilator& a);

/// True iff every window of order()+1 consecutive terms satisfies the recurrence.
bool annihilates(const Annihilator& a, std::span<const LaurentPoly> terms);
/// Numeric variant: the recurrence coefficients are evaluated at `at`.
bool annihilates(const Annihilator& a, std::span<const Rational> terms, const Assignment& at);

}  // namespace horadam
