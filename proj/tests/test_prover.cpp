#include "doctest.h"

#include <algorithm>
#include <random>

#include "horadam/prover.hpp"
#include "horadam/sequences.hpp"
#include "support.hpp"

using namespace horadam;

namespace {

const LaurentPoly p = LaurentPoly::symbol(Symbol::P);
const LaurentPoly q = LaurentPoly::symbol(Symbol::Q);
const LaurentPoly a = LaurentPoly::symbol(Symbol::A);
const LaurentPoly b = LaurentPoly::symbol(Symbol::B);
const LaurentPoly e_const = p * a * b - q * a * a - b * b;

const char* kE = "let e = p*a*b - q*a^2 - b^2\n";
const char* kMelham = "forall n: W(n+1)*W(n+2)*W(n+6) - W(n+3)^3 == e*q^(n+1)*(p^3*W(n+2) - q^2*W(n+1))";
const char* kFibonacci = "forall n with p = 1, q = -1: u(n+1)*u(n+2)*u(n+6) - u(n+3)^3 == q^(n)*u(n)";
const char* kHowardMixed =
    "forall m, n, k: V(m+k)*W(n+k) - q^(k)*V(m)*W(n) == u(k)*(b*V(m+n+k) - q*a*V(m+n+k-1))";

Identity with_e(const std::string& text) { return parse_identity(std::string(kE) + text); }

std::vector<Identity> corpus(const char* name) {
  return parse(testing::read_file(testing::corpus_path(name))).identities;
}

Annihilator lucas() { return Annihilator(UPoly{q, -p, LaurentPoly(1)}); }

}  // namespace

TEST_CASE("annihilator_for a product of two shifted W terms") {
  for (long r0 : {0L, 1L, 3L, -2L}) {
    std::string shift = r0 < 0 ? "n-" + std::to_string(-r0) : "n+" + std::to_string(r0);
    Identity id = parse_identity("forall n: W(n)*W(" + shift + ") == 0");
    Annihilator ann = annihilator_for(normalize(id), 0);
    CHECK(ann.order() <= 4);
    CHECK(ann == product(lucas(), lucas()));
    auto [quot, rem] = upoly_divmod_monic(ann.coefficients(), symmetric_square(lucas()).coefficients());
    CHECK(rem.empty());
  }
}

TEST_CASE("annihilator_for simple shapes") {
  CHECK(annihilator_for(normalize(parse_identity("forall n: q^(n) == 0")), 0) == Annihilator::geometric(q));
  CHECK(annihilator_for(normalize(parse_identity("forall n: p*a == 0")), 0) == Annihilator::constant());
  CHECK(annihilator_for(NormalForm(), 0) == Annihilator::constant());
  // Slope 0 in the eliminated index.
  CHECK(annihilator_for(normalize(parse_identity("forall m, n: W(m)*u(n+2) == 0")), 1) == lucas());
}

TEST_CASE("annihilator_for the cubic identity has order 10") {
  Identity id = with_e(kMelham);
  NormalForm nf = normalize(id);
  Annihilator ann = annihilator_for(nf, 0);
  CHECK(ann.order() == 10);
  CHECK(ann.has_unit_constant_term());

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    Assignment at = testing::random_assignment(rng, 5);
    std::vector<Rational> terms;
    // Only the left side, so the check does not rely on the identity being true.
    NormalForm lhs = normalize(id.lhs, id.lets);
    for (long n = 0; n < 12; ++n) {
      const long idx[] = {n};
      terms.push_back(lhs.evaluate(at, idx));
    }
    CHECK(annihilates(ann, terms, at));
  }
}

TEST_CASE("order cap") {
  NormalForm nf = normalize(with_e(kMelham));
  CHECK_THROWS_AS(annihilator_for(nf, 0, 4), OrderCapExceeded);
  Certificate cert = prove(with_e(kMelham), {}, ProverConfig{4});
  CHECK(cert.verdict == Verdict::Aborted);
  CHECK(cert.reason.find("exceeds the cap 4") != std::string::npos);
  CHECK(cert.leaves.empty());
}

TEST_CASE("prove the cubic identity") {
  Certificate cert = prove(with_e(kMelham));
  CHECK(cert.verdict == Verdict::Proved);
  CHECK(cert.leaves.size() == 10);
  CHECK(cert.elimination == std::vector<std::string>{"n"});
  CHECK_FALSE(cert.witness.has_value());
}

TEST_CASE("prove the pinned Fibonacci specialization") {
  Identity id = parse_identity(kFibonacci);
  Certificate cert = prove(id);
  CHECK(cert.verdict == Verdict::Proved);

  Assignment at;
  at[Symbol::P] = 1;
  at[Symbol::Q] = -1;
  const long n2[] = {2};
  CHECK(evaluate(id.lhs, id.lets, at, n2) == 1);  // 2*3*21 - 125
  CHECK(evaluate(id.rhs, id.lets, at, n2) == 1);  // (-1)^2 * F(2)

  // Without the pins it is false for generic p, q, a, b.
  Identity generic = id;
  generic.pins.clear();
  CHECK(prove(generic).verdict == Verdict::Refuted);
}

TEST_CASE("a flipped sign is refuted with the expected leaf") {
  Certificate cert = prove(with_e("forall n: W(n+2)*W(n+4) - W(n+3)^2 == -e*q^(n+2)"));
  CHECK(cert.verdict == Verdict::Refuted);
  REQUIRE(cert.witness.has_value());
  const Leaf& leaf = cert.leaves[*cert.witness];
  CHECK(leaf.at == Instantiation{{"n", 0}});
  CHECK(leaf.value == (LaurentPoly(2) * e_const * q * q).specialize({}));
}

TEST_CASE("index-free identities are checked directly") {
  Certificate cert = prove(parse_identity("forall n: W(2) == p*b - q*a"));
  CHECK(cert.verdict == Verdict::Proved);
  CHECK(cert.leaves.size() == 1);
  CHECK(prove(parse_identity("forall n: W(-1) == p*a - b")).verdict == Verdict::Refuted);
}

TEST_CASE("elimination order validation") {
  Identity id = parse_identity("forall m, n: W(m+n+1) == W(m+1)*u(n+1) - q*W(m)*u(n)");
  std::vector<std::string> bad = {"m", "x"};
  CHECK_THROWS_AS(prove(id, bad), std::invalid_argument);
  std::vector<std::string> partial = {"m"};
  CHECK_THROWS_AS(prove(id, partial), std::invalid_argument);
  std::vector<std::string> dup = {"m", "m"};
  CHECK_THROWS_AS(prove(id, dup), std::invalid_argument);
}

TEST_CASE("addition formula reduces to the two base cases") {
  Identity id = parse_identity("forall m, n: W(m+n+1) == W(m+1)*u(n+1) - q*W(m)*u(n)");
  std::vector<std::string> order = {"m", "n"};
  Certificate cert = prove(id, order);
  CHECK(cert.verdict == Verdict::Proved);
  REQUIRE(cert.root.next.size() == 1);
  const Elimination& first = cert.root.next.front();
  CHECK(first.index == "m");
  CHECK(first.annihilator.order() == 2);
  REQUIRE(first.subgoals.size() == 2);
  CHECK(first.subgoals[0].goal ==
        normalize(parse_identity("forall m, n: W(n+1) == u(n+1)*W(1) - q*u(n)*W(0)")));
  CHECK(first.subgoals[1].goal ==
        normalize(parse_identity("forall m, n: W(n+2) == u(n+1)*W(2) - q*u(n)*W(1)")));
}

TEST_CASE("mixed identity is proved under every elimination order") {
  Identity id = parse_identity(kHowardMixed);
  std::vector<std::string> order = {"k", "m", "n"};
  std::sort(order.begin(), order.end());
  int count = 0;
  do {
    CHECK(prove(id, order).verdict == Verdict::Proved);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(count == 6);
}

TEST_CASE("certificate structural invariants on the corpus") {
  for (const auto& id : corpus("identities.fib")) {
    Certificate cert = prove(id);
    CAPTURE(id.label);
    CHECK(cert.verdict == Verdict::Proved);
    // Leaf count is bounded by the product of the largest order met at each depth.
    std::vector<std::size_t> max_at_depth(id.vars.size(), 0);
    std::vector<std::pair<const Subgoal*, std::size_t>> stack = {{&cert.root, 0}};
    while (!stack.empty()) {
      auto [s, depth] = stack.back();
      stack.pop_back();
      for (const auto& e : s->next) {
        CHECK(e.annihilator.has_unit_constant_term());
        CHECK(e.subgoals.size() == e.annihilator.order());
        max_at_depth[depth] = std::max(max_at_depth[depth], e.annihilator.order());
        for (const auto& child : e.subgoals) stack.emplace_back(&child, depth + 1);
      }
      if (s->next.empty()) {
        REQUIRE(s->leaf.has_value());
        CHECK(s->goal.is_index_free());
        CHECK(cert.leaves[*s->leaf].at == s->at);
      }
    }
    std::size_t bound = 1;
    for (auto m : max_at_depth) bound *= m;
    CHECK(cert.leaves.size() <= bound);
    for (const auto& leaf : cert.leaves) CHECK(leaf.is_zero());
  }
}

TEST_CASE("proved identities hold at negative indices") {
  // The check points are 0..d-1, but a unit constant term lets the
  // recurrence run backwards; confirm numerically on negative index tuples.
  std::mt19937_64 rng(404);
  for (const auto& id : corpus("identities.fib")) {
    CAPTURE(id.label);
    REQUIRE(prove(id).verdict == Verdict::Proved);
    Assignment at = testing::random_assignment(rng, 5);
    for (const auto& [s, v] : id.pins) at[s] = v;
    std::vector<long> values(id.vars.size(), -1);
    for (long base = -1; base >= -5; --base) {
      for (std::size_t i = 0; i < values.size(); ++i) values[i] = base - static_cast<long>(i);
      CHECK(evaluate(id.lhs, id.lets, at, values) == evaluate(id.rhs, id.lets, at, values));
    }
  }
}

TEST_CASE("fuzz") {
  Identity mixed = parse_identity(kHowardMixed);
  FuzzResult pass = fuzz(mixed, FuzzConfig{200, 17, 9});
  CHECK(pass.passed());
  CHECK(pass.trials_run == 200);

  Identity bumped =
      parse_identity("forall n, j: W(n)^2 - q^(n-j)*W(j)^2 == u(n-j)*((b+1)*W(n+j) - q*a*W(n+j-1))");
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
    FuzzResult r = fuzz(bumped, FuzzConfig{200, seed, 9});
    REQUIRE_FALSE(r.passed());
    const Counterexample& c = *r.counterexample;
    CHECK(c.lhs != c.rhs);
    CHECK(evaluate(bumped.lhs, bumped.lets, c.at, c.index_values) == c.lhs);
    CHECK(c.at[Symbol::Q] != 0);
  }

  FuzzResult once = fuzz(bumped, FuzzConfig{1, 5, 9});
  FuzzResult again = fuzz(bumped, FuzzConfig{1, 5, 9});
  CHECK(once.trials_run == 1);
  CHECK(once.passed() == again.passed());
  if (!once.passed()) CHECK(once.counterexample->index_values == again.counterexample->index_values);

  CHECK_THROWS_AS(fuzz(bumped, FuzzConfig{0, 1, 9}), std::invalid_argument);

  Identity pinned = parse_identity(kFibonacci);
  CHECK(fuzz(pinned, FuzzConfig{50, 3, 9}).passed());
}

TEST_CASE("prover and oracle agree on corpus and mutations") {
  for (const auto& id : corpus("identities.fib")) {
    CAPTURE(id.label);
    CHECK(prove(id).verdict == Verdict::Proved);
    CHECK(fuzz(id, FuzzConfig{200, 11, 9}).passed());
  }
  for (const auto& id : corpus("mutations.fib")) {
    CAPTURE(id.label);
    CHECK(prove(id).verdict == Verdict::Refuted);
    CHECK_FALSE(fuzz(id, FuzzConfig{500, 11, 9}).passed());
  }
}
