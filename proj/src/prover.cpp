#include "horadam/prover.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "horadam/sequences.hpp"

namespace horadam {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "PROVED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Aborted: return "ABORTED";
  }
  return "ABORTED";
}

namespace {

void check_cap(const Annihilator& a, std::size_t max_order) {
  if (a.order() > max_order)
    throw OrderCapExceeded("annihilator order " + std::to_string(a.order()) + " exceeds the cap " +
                           std::to_string(max_order));
}

}  // namespace

Annihilator annihilator_for(const NormalForm& nf, std::size_t var, std::size_t max_order) {
  // Distinct per-monomial annihilators, in first-seen order.
  std::vector<Annihilator> distinct;
  for (const auto& [atoms, coeff] : nf.monomials()) {
    Annihilator mono = Annihilator::constant();
    for (const auto& atom : atoms) {
      mono = product(mono, slope_annihilator(atom.kind, atom.index.coefficient(var)));
      check_cap(mono, max_order);
    }
    if (std::find(distinct.begin(), distinct.end(), mono) == distinct.end()) distinct.push_back(std::move(mono));
  }
  if (distinct.empty()) return Annihilator::constant();
  Annihilator total = distinct.front();
  for (std::size_t i = 1; i < distinct.size(); ++i) {
    total = sum(total, distinct[i]);
    check_cap(total, max_order);
  }
  return total;
}

std::vector<const Elimination*> Certificate::eliminations() const {
  std::vector<const Elimination*> out;
  std::vector<const Subgoal*> stack = {&root};
  while (!stack.empty()) {
    const Subgoal* s = stack.back();
    stack.pop_back();
    for (const auto& e : s->next) {
      out.push_back(&e);
      for (auto it = e.subgoals.rbegin(); it != e.subgoals.rend(); ++it) stack.push_back(&*it);
    }
  }
  return out;
}

namespace {

RationalPoly expand_leaf(const NormalForm& goal, const Pins& pins) {
  LaurentPoly total;
  for (const auto& [atoms, coeff] : goal.monomials()) {
    LaurentPoly term = coeff;
    for (const auto& atom : atoms) term *= symbolic_term(atom.kind, atom.index.constant);
    total += term;
  }
  return total.specialize(pins);
}

class ProofBuilder {
 public:
  ProofBuilder(Certificate& cert, std::vector<std::size_t> order, const ProverConfig& config)
      : cert_(cert), order_(std::move(order)), config_(config) {}

  void build(Subgoal& goal, std::size_t depth) {
    if (depth == order_.size()) {
      if (!goal.goal.is_index_free()) throw std::logic_error("leaf still depends on an index variable");
      goal.leaf = cert_.leaves.size();
      cert_.leaves.push_back(Leaf{goal.at, expand_leaf(goal.goal, cert_.pins)});
      return;
    }
    const std::size_t var = order_[depth];
    Annihilator ann = annihilator_for(goal.goal, var, config_.max_order);
    if (!ann.has_unit_constant_term())
      throw std::logic_error("annihilator without unit constant term: " + ann.str());

    Elimination elim{cert_.vars[var], ann, {}};
    const long order = static_cast<long>(ann.order());
    elim.subgoals.reserve(ann.order());
    for (long value = 0; value < order; ++value) {
      Subgoal child;
      child.at = goal.at;
      child.at.emplace_back(cert_.vars[var], value);
      child.goal = substitute_index(goal.goal, var, value);
      build(child, depth + 1);
      elim.subgoals.push_back(std::move(child));
    }
    goal.next.push_back(std::move(elim));
  }

 private:
  Certificate& cert_;
  std::vector<std::size_t> order_;
  const ProverConfig& config_;
};

std::vector<std::size_t> resolve_order(const Identity& id, std::span<const std::string> names) {
  std::vector<std::size_t> order;
  if (names.empty()) {
    for (std::size_t i = 0; i < id.vars.size(); ++i) order.push_back(i);
    return order;
  }
  std::set<std::size_t> seen;
  for (const auto& name : names) {
    auto it = std::find(id.vars.begin(), id.vars.end(), name);
    if (it == id.vars.end()) throw std::invalid_argument("elimination order names unknown index '" + name + "'");
    auto pos = static_cast<std::size_t>(it - id.vars.begin());
    if (!seen.insert(pos).second) throw std::invalid_argument("elimination order repeats '" + name + "'");
    order.push_back(pos);
  }
  if (order.size() != id.vars.size())
    throw std::invalid_argument("elimination order must list every index variable");
  return order;
}

}  // namespace

Certificate prove(const Identity& id, std::span<const std::string> elimination_order, const ProverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.identity = id.source.empty() ? render(id) : id.source;
  cert.label = id.label;
  cert.vars = id.vars;
  cert.pins = id.pins;
  std::vector<std::size_t> order = resolve_order(id, elimination_order);
  for (std::size_t v : order) cert.elimination.push_back(id.vars[v]);

  cert.root.goal = normalize(id);
  try {
    ProofBuilder(cert, order, config).build(cert.root, 0);
    cert.verdict = Verdict::Proved;
    for (std::size_t i = 0; i < cert.leaves.size(); ++i)
      if (!cert.leaves[i].is_zero()) {
        cert.verdict = Verdict::Refuted;
        cert.witness = i;
        break;
      }
  } catch (const OrderCapExceeded& e) {
    cert.verdict = Verdict::Aborted;
    cert.reason = e.what();
    cert.root.next.clear();
    cert.leaves.clear();
  }
  cert.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

FuzzResult fuzz(const Identity& id, const FuzzConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("fuzz needs at least one trial");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<long> draw(-config.range, config.range);
  FuzzResult result;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    Assignment at;
    for (Symbol s : kAllSymbols) {
      if (auto it = id.pins.find(s); it != id.pins.end()) {
        at[s] = it->second;
        continue;
      }
      long v = draw(rng);
      while (s == Symbol::Q && v == 0) v = draw(rng);
      at[s] = v;
    }
    std::vector<long> indices(id.vars.size());
    for (auto& v : indices) v = draw(rng);
    ++result.trials_run;
    Rational lhs = evaluate(id.lhs, id.lets, at, indices);
    Rational rhs = evaluate(id.rhs, id.lets, at, indices);
    if (lhs != rhs) {
      result.counterexample = Counterexample{trial, at, indices, lhs, rhs};
      break;
    }
  }
  return result;
}

}  // namespace horadam
