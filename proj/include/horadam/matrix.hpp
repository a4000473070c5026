#pragma once

// Square matrices over the Laurent ring and the division-free
// characteristic polynomial.

#include <cstddef>
#include <vector>

#include "horadam/ring.hpp"

namespace horadam {

/// Univariate polynomial in x over LaurentPoly, coefficients low to high.
using UPoly = std::vector<LaurentPoly>;

UPoly upoly_mul(const UPoly& f, const UPoly& g);
/// Quotient and remainder of f by a monic g; valid over any commutative ring.
std::pair<UPoly, UPoly> upoly_divmod_monic(const UPoly& f, const UPoly& g);
/// Drops trailing zero coefficients.
void upoly_trim(UPoly& f);

class Matrix {
 public:
  explicit Matrix(std::size_t n = 0) : n_(n), data_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_;
  std::vector<LaurentPoly> data_;
};

Matrix matrix_pow(const Matrix& m, unsigned k);
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Companion matrix of a monic polynomial, acting on the state vector
/// (X(n+d-1), ..., X(n)).
Matrix companion(const UPoly& monic);

/// det(x*I - m) by Berkowitz's algorithm: no divisions, O(n^4) ring operations.
/// Returned low to high; always monic of degree size().
UPoly charpoly(const Matrix& m);

}  // namespace horadam
