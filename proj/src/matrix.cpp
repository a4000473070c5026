#include "horadam/matrix.hpp"

#include <stdexcept>

namespace horadam {

void upoly_trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UPoly upoly_mul(const UPoly& f, const UPoly& g) {
  if (f.empty() || g.empty()) return {};
  UPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  }
  upoly_trim(r);
  return r;
}

std::pair<UPoly, UPoly> upoly_divmod_monic(const UPoly& f, const UPoly& g) {
  if (g.empty() || g.back() != LaurentPoly(1))
    throw std::invalid_argument("divisor must be monic");
  UPoly rem = f;
  upoly_trim(rem);
  const std::size_t dg = g.size() - 1;
  if (rem.size() <= dg) return {UPoly{}, rem};
  UPoly quot(rem.size() - dg);
  for (std::size_t k = rem.size(); k-- > dg;) {
    LaurentPoly lead = rem[k];
    if (lead.is_zero()) continue;
    quot[k - dg] = lead;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= lead * g[j];
  }
  upoly_trim(quot);
  upoly_trim(rem);
  return {quot, rem};
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const LaurentPoly& lhs = (*this)(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += lhs * o(k, j);
    }
  return r;
}

Matrix matrix_pow(const Matrix& m, unsigned k) {
  Matrix result = Matrix::identity(m.size());
  Matrix base = m;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.size(), nb = b.size();
  Matrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          if (!b(k, l).is_zero()) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    }
  return r;
}

Matrix companion(const UPoly& monic) {
  if (monic.size() < 2 || monic.back() != LaurentPoly(1))
    throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
  const std::size_t d = monic.size() - 1;
  Matrix m(d);
  for (std::size_t j = 0; j < d; ++j) m(0, j) = -monic[d - 1 - j];
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = LaurentPoly(1);
  return m;
}

UPoly charpoly(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {LaurentPoly(1)};

  // Coefficients high to low while iterating over leading principal blocks.
  std::vector<LaurentPoly> vect = {LaurentPoly(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -m(r,r), -R*C, -R*A*C, ..., -R*A^(r-1)*C where A is
    // the leading r x r block, R = row r and C = column r restricted to it.
    std::vector<LaurentPoly> t(r + 2);
    t[0] = LaurentPoly(1);
    t[1] = -m(r, r);
    std::vector<LaurentPoly> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      LaurentPoly dot;
      for (std::size_t i = 0; i < r; ++i)
        if (!m(r, i).is_zero() && !v[i].is_zero()) dot += m(r, i) * v[i];
      t[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<LaurentPoly> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!m(i, j).is_zero() && !v[j].is_zero()) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<LaurentPoly> out(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (!t[i - j].is_zero() && !vect[j].is_zero()) out[i] += t[i - j] * vect[j];
    vect = std::move(out);
  }
  return UPoly(vect.rbegin(), vect.rend());
}

}  // namespace horadam
