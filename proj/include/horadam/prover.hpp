#pragma once

// Identity prover. For the next index variable, fold an annihilator over the
// normal form of lhs - rhs (products of atom annihilators per monomial, sums
// across monomials). If it has order d, the identity holds for all integer
// values of that index iff it holds at 0, ..., d-1: the constant term is a
// unit, so the recurrence runs in both directions. Recurse on the d
// instantiated subgoals; index-free leaves are expanded into polynomials and
// tested for zero.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "horadam/cfinite.hpp"
#include "horadam/lang.hpp"

namespace horadam {

class OrderCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProverConfig {
  std::size_t max_order = 64;
};

/// Annihilator in index `var` of every monomial of `nf`, combined. Throws
/// OrderCapExceeded once the running order passes `max_order`.
Annihilator annihilator_for(const NormalForm& nf, std::size_t var, std::size_t max_order = 64);

/// Index values fixed so far, in elimination order.
using Instantiation = std::vector<std::pair<std::string, long>>;

struct Leaf {
  Instantiation at;
  RationalPoly value;  // expanded lhs - rhs with pinned scalars substituted

  bool is_zero() const { return value.is_zero(); }
};

struct Elimination;

struct Subgoal {
  Instantiation at;
  NormalForm goal;
  std::vector<Elimination> next;     // empty for leaves
  std::optional<std::size_t> leaf;   // index into Certificate::leaves
};

struct Elimination {
  std::string index;
  Annihilator annihilator;
  std::vector<Subgoal> subgoals;  // instantiated at 0, ..., order-1
};

enum class Verdict { Proved, Refuted, Aborted };
std::string_view to_string(Verdict v);

struct Certificate {
  std::string identity;
  std::string label;
  std::vector<std::string> vars;
  std::vector<std::string> elimination;
  Pins pins;
  Subgoal root;
  std::vector<Leaf> leaves;
  Verdict verdict = Verdict::Aborted;
  std::optional<std::size_t> witness;  // first nonzero leaf when refuted
  std::string reason;                  // when aborted
  double ms = 0;

  /// Every annihilator in the proof tree, depth first.
  std::vector<const Elimination*> eliminations() const;
};

/// `elimination_order` names each declared index variable exactly once; empty
/// means declaration order. Order-cap failures produce an aborted certificate.
Certificate prove(const Identity& id, std::span<const std::string> elimination_order = {},
                  const ProverConfig& config = {});

struct FuzzConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  long range = 9;
};

struct Counterexample {
  std::size_t trial = 0;
  Assignment at;
  std::vector<long> index_values;
  Rational lhs;
  Rational rhs;
};

struct FuzzResult {
  std::size_t trials_run = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Evaluates both sides exactly at uniformly drawn integer points: scalars in
/// [-range, range] (q redrawn while zero, pinned scalars fixed), indices in
/// [-range, range]. Deterministic for a given seed.
FuzzResult fuzz(const Identity& id, const FuzzConfig& config);

}  // namespace horadam
