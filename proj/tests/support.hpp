#pragma once

// Test-only generators and a brute-force characteristic polynomial.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "horadam/matrix.hpp"
#include "horadam/ring.hpp"

namespace horadam::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> qexp(-2, 2);
  LaurentPoly f;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m;
    for (Symbol s : kAllSymbols)
      m = m * Monomial::of(s, s == Symbol::Q ? qexp(rng) : exp(rng));
    f += LaurentPoly(m, Integer(coeff(rng)));
  }
  return f;
}

inline Assignment random_assignment(std::mt19937_64& rng, int range = 6) {
  std::uniform_int_distribution<int> v(-range, range);
  Assignment at;
  for (Symbol s : kAllSymbols) at[s] = v(rng);
  while (at[Symbol::Q] == 0) at[Symbol::Q] = v(rng);
  return at;
}

/// det(x*I - m) by the Leibniz permutation expansion. Exponential; small m only.
inline UPoly leibniz_charpoly(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  UPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    UPoly term = {LaurentPoly(inversions % 2 == 0 ? 1 : -1)};
    for (std::size_t i = 0; i < n; ++i) {
      UPoly entry = {-m(i, perm[i])};
      if (perm[i] == i) entry.push_back(LaurentPoly(1));
      term = upoly_mul(term, entry);
    }
    if (total.size() < term.size()) total.resize(term.size());
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  upoly_trim(total);
  return total;
}

}  // namespace horadam::testing

#include <fstream>
#include <sstream>
#include <string>

namespace horadam::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string corpus_path(const std::string& name) { return std::string(HORADAM_CORPUS_DIR) + "/" + name; }

}  // namespace horadam::testing
