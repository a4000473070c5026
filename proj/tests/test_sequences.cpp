#include "doctest.h"

#include <random>

#include "horadam/sequences.hpp"
#include "support.hpp"

using namespace horadam;

namespace {
const LaurentPoly p = LaurentPoly::symbol(Symbol::P);
const LaurentPoly q = LaurentPoly::symbol(Symbol::Q);
const LaurentPoly a = LaurentPoly::symbol(Symbol::A);
const LaurentPoly b = LaurentPoly::symbol(Symbol::B);
const LaurentPoly qinv = LaurentPoly::q_power(-1);
constexpr SequenceKind kLucasKinds[] = {SequenceKind::W, SequenceKind::V, SequenceKind::U};
constexpr SequenceKind kAllKinds[] = {SequenceKind::W, SequenceKind::V, SequenceKind::U, SequenceKind::GeoQ};

LaurentPoly substitute_w_to_u(const LaurentPoly& f) {
  // a := 0, b := 1, leaving p and q symbolic.
  RationalPoly s = f.specialize({{Symbol::A, Rational(0)}, {Symbol::B, Rational(1)}});
  LaurentPoly out;
  for (const auto& [m, c] : s.terms()) {
    REQUIRE(c.get_den() == 1);
    out += LaurentPoly(m, c.get_num());
  }
  return out;
}
}  // namespace

TEST_CASE("symbolic terms") {
  CHECK(symbolic_term(SequenceKind::W, 0) == a);
  CHECK(symbolic_term(SequenceKind::W, 1) == b);
  CHECK(symbolic_term(SequenceKind::W, 2) == p * b - q * a);
  CHECK(symbolic_term(SequenceKind::W, -1) == p * a * qinv - b * qinv);
  CHECK(symbolic_term(SequenceKind::V, 0) == LaurentPoly::symbol(Symbol::C));
  CHECK(symbolic_term(SequenceKind::GeoQ, -2) == LaurentPoly::q_power(-2));
  CHECK(symbolic_term(SequenceKind::U, -3) == -LaurentPoly::q_power(-3) * symbolic_term(SequenceKind::U, 3));
}

TEST_CASE("symbolic terms satisfy the recurrence on [-10, 10]") {
  for (SequenceKind kind : kAllKinds) {
    const Annihilator& rec = definition(kind).charpoly;
    for (long k = -10; k + static_cast<long>(rec.order()) <= 10; ++k) {
      LaurentPoly acc;
      for (std::size_t t = 0; t <= rec.order(); ++t)
        acc += rec.coefficients()[t] * symbolic_term(kind, k + static_cast<long>(t));
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("numeric terms") {
  Assignment fib;
  fib[Symbol::P] = 1;
  fib[Symbol::Q] = -1;
  // Recurrence oracle by hand: 0 1 1 2 3 5 8
  CHECK(numeric_term(SequenceKind::U, 6, fib) == 8);
  CHECK(numeric_term(SequenceKind::U, -6, fib) == -8);
  Assignment g;
  g[Symbol::Q] = 3;
  CHECK(numeric_term(SequenceKind::GeoQ, 4, g) == 81);
  CHECK(numeric_term(SequenceKind::GeoQ, -1, g) == Rational(1, 3));
  Assignment w;
  w[Symbol::A] = Rational(7, 2);
  w[Symbol::Q] = 5;
  CHECK(numeric_term(SequenceKind::W, 0, w) == Rational(7, 2));
  w[Symbol::Q] = 0;
  CHECK_THROWS_AS(numeric_term(SequenceKind::W, 3, w), ZeroQ);
}

TEST_CASE("numeric terms agree with evaluated symbolic terms") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    Assignment at = testing::random_assignment(rng);
    for (SequenceKind kind : kAllKinds)
      for (long k = -8; k <= 8; ++k) CHECK(numeric_term(kind, k, at) == symbolic_term(kind, k).evaluate(at));
  }
}

TEST_CASE("W specializes to u at a=0, b=1") {
  for (long k = -6; k <= 6; ++k)
    CHECK(substitute_w_to_u(symbolic_term(SequenceKind::W, k)) == symbolic_term(SequenceKind::U, k));
}

TEST_CASE("slope annihilators") {
  CHECK(slope_annihilator(SequenceKind::W, 1).str() == "x^2 - p*x + q");
  CHECK(slope_annihilator(SequenceKind::W, 0).str() == "x - 1");
  CHECK(slope_annihilator(SequenceKind::GeoQ, -1).str() == "x - q^-1");
  CHECK(slope_annihilator(SequenceKind::GeoQ, 3).str() == "x - q^3");

  // Oracle: square the companion matrix by hand, characteristic polynomial
  // of a 2x2 is x^2 - trace*x + det.
  // [[p, -q], [1, 0]]^2 = [[p^2 - q, -p*q], [p, -q]]
  LaurentPoly trace = (p * p - q) + (-q);
  LaurentPoly det = (p * p - q) * (-q) - (-(p * q)) * p;
  Annihilator expected(UPoly{det, -trace, LaurentPoly(1)});
  CHECK(slope_annihilator(SequenceKind::W, 2) == expected);
  CHECK(expected.str() == "x^2 - (p^2 - 2*q)*x + q^2");

  // Inverse companion [[0, 1], [-1/q, p/q]]: trace p/q, det 1/q.
  CHECK(slope_annihilator(SequenceKind::U, -1) == Annihilator(UPoly{qinv, -(p * qinv), LaurentPoly(1)}));
}

TEST_CASE("slope annihilators annihilate every offset numerically") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Assignment at = testing::random_assignment(rng, 4);
    for (SequenceKind kind : kAllKinds)
      for (long m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        Annihilator ann = slope_annihilator(kind, m);
        CHECK(ann.has_unit_constant_term());
        for (long c = -2; c <= 2; ++c) {
          std::vector<Rational> terms;
          for (long n = 0; n < 10; ++n) terms.push_back(numeric_term(kind, m * n + c, at));
          CHECK(annihilates(ann, terms, at));
        }
      }
  }
}

TEST_CASE("W_{2n} satisfies the square-slope recurrence for random assignments") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Assignment at = testing::random_assignment(rng);
    Rational p2q = at[Symbol::P] * at[Symbol::P] - 2 * at[Symbol::Q];
    Rational q2 = at[Symbol::Q] * at[Symbol::Q];
    for (long n = -3; n < 6; ++n) {
      Rational lhs = numeric_term(SequenceKind::W, 2 * (n + 2), at) - p2q * numeric_term(SequenceKind::W, 2 * (n + 1), at) +
                     q2 * numeric_term(SequenceKind::W, 2 * n, at);
      CHECK(lhs == 0);
    }
  }
}

TEST_CASE("the three Lucas-type kinds share one characteristic polynomial") {
  for (SequenceKind kind : kLucasKinds) CHECK(definition(kind).charpoly.str() == "x^2 - p*x + q");
  CHECK(definition(SequenceKind::GeoQ).charpoly.str() == "x - q");
}
