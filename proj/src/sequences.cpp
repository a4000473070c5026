#include "horadam/sequences.hpp"

#include <array>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace horadam {

std::string_view sequence_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::W: return "W";
    case SequenceKind::V: return "V";
    case SequenceKind::U: return "u";
    case SequenceKind::GeoQ: return "q";
  }
  return "?";
}

std::optional<SequenceKind> sequence_from_name(std::string_view name) {
  if (name == "W") return SequenceKind::W;
  if (name == "V") return SequenceKind::V;
  if (name == "u") return SequenceKind::U;
  return std::nullopt;
}

namespace {

const LaurentPoly kP = LaurentPoly::symbol(Symbol::P);
const LaurentPoly kQ = LaurentPoly::symbol(Symbol::Q);
const LaurentPoly kQInv = LaurentPoly::q_power(-1);

Annihilator lucas_charpoly() { return Annihilator(UPoly{kQ, -kP, LaurentPoly(1)}); }

SequenceDef make_def(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::W:
      return {kind, 2, {LaurentPoly::symbol(Symbol::A), LaurentPoly::symbol(Symbol::B)}, lucas_charpoly()};
    case SequenceKind::V:
      return {kind, 2, {LaurentPoly::symbol(Symbol::C), LaurentPoly::symbol(Symbol::D)}, lucas_charpoly()};
    case SequenceKind::U:
      return {kind, 2, {LaurentPoly(0), LaurentPoly(1)}, lucas_charpoly()};
    case SequenceKind::GeoQ:
      return {kind, 1, {LaurentPoly(1)}, Annihilator::geometric(kQ)};
  }
  throw std::logic_error("unknown sequence kind");
}

// Terms grown outward from indices 0 and 1: forward[i] is term i,
// backward[i] is term -(i+1).
struct TermTable {
  std::mutex mutex;
  std::deque<LaurentPoly> forward;
  std::deque<LaurentPoly> backward;
};

TermTable& table_for(SequenceKind kind) {
  static std::array<TermTable, 3> tables;
  return tables[static_cast<std::size_t>(kind)];
}

}  // namespace

const SequenceDef& definition(SequenceKind kind) {
  static const std::array<SequenceDef, 4> defs = {make_def(SequenceKind::W), make_def(SequenceKind::V),
                                                  make_def(SequenceKind::U), make_def(SequenceKind::GeoQ)};
  return defs[static_cast<std::size_t>(kind)];
}

LaurentPoly symbolic_term(SequenceKind kind, long k) {
  if (kind == SequenceKind::GeoQ) return LaurentPoly::q_power(static_cast<int>(k));

  TermTable& table = table_for(kind);
  std::lock_guard lock(table.mutex);
  if (table.forward.empty()) {
    const auto& init = definition(kind).initial;
    table.forward.assign(init.begin(), init.end());
  }
  if (k >= 0) {
    auto& f = table.forward;
    while (static_cast<long>(f.size()) <= k) f.push_back(kP * f[f.size() - 1] - kQ * f[f.size() - 2]);
    return f[static_cast<std::size_t>(k)];
  }
  // W_{n} = (p W_{n+1} - W_{n+2}) / q
  auto& f = table.forward;
  auto& b = table.backward;
  auto at = [&](long i) -> const LaurentPoly& {
    return i >= 0 ? f[static_cast<std::size_t>(i)] : b[static_cast<std::size_t>(-i - 1)];
  };
  while (static_cast<long>(b.size()) < -k) {
    long n = -static_cast<long>(b.size()) - 1;
    b.push_back(kQInv * (kP * at(n + 1) - at(n + 2)));
  }
  return b[static_cast<std::size_t>(-k - 1)];
}

Rational numeric_term(SequenceKind kind, long k, const Assignment& at) {
  const Rational& q = at[Symbol::Q];
  if (q == 0) throw ZeroQ();
  if (kind == SequenceKind::GeoQ) return rational_pow(q, static_cast<int>(k));

  const Rational& p = at[Symbol::P];
  Rational x0, x1;
  switch (kind) {
    case SequenceKind::W: x0 = at[Symbol::A]; x1 = at[Symbol::B]; break;
    case SequenceKind::V: x0 = at[Symbol::C]; x1 = at[Symbol::D]; break;
    default: x0 = 0; x1 = 1; break;
  }
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      Rational next = p * x1 - q * x0;
      x0 = std::move(x1);
      x1 = std::move(next);
    }
    return x0;
  }
  // Window (x0, x1) = (S_n, S_{n+1}) moved down to n = k.
  for (long i = 0; i > k; --i) {
    Rational prev = (p * x0 - x1) / q;
    x1 = std::move(x0);
    x0 = std::move(prev);
  }
  return x0;
}

Annihilator slope_annihilator(SequenceKind kind, long m) {
  if (m == 0) return Annihilator::constant();
  if (kind == SequenceKind::GeoQ) return Annihilator::geometric(LaurentPoly::q_power(static_cast<int>(m)));

  Matrix step = companion(definition(kind).charpoly.coefficients());
  if (m < 0) {
    // adj(C) / det(C) with det(C) = q
    Matrix inverse(2);
    inverse(0, 1) = LaurentPoly(1);
    inverse(1, 0) = -kQInv;
    inverse(1, 1) = kP * kQInv;
    step = inverse;
  }
  return Annihilator(charpoly(matrix_pow(step, static_cast<unsigned>(std::labs(m)))));
}

}  // namespace horadam
