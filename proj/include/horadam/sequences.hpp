#pragma once

// The sequence families: Horadam W (a, b), V (c, d), the fundamental
// sequence u (0, 1), all with W_n = p W_{n-1} - q W_{n-2}, plus n -> q^n.

#include <optional>
#include <string_view>
#include <vector>

#include "horadam/cfinite.hpp"
#include "horadam/ring.hpp"

namespace horadam {

enum class SequenceKind { W, V, U, GeoQ };

std::string_view sequence_name(SequenceKind kind);  // "W", "V", "u", "q"
std::optional<SequenceKind> sequence_from_name(std::string_view name);

struct SequenceDef {
  SequenceKind kind;
  int order;
  std::vector<LaurentPoly> initial;  // terms 0 .. order-1
  Annihilator charpoly;
};

const SequenceDef& definition(SequenceKind kind);

/// Exact symbolic k-th term for any integer k. Negative indices run the
/// recurrence backward, dividing by q. Terms are memoized per kind.
LaurentPoly symbolic_term(SequenceKind kind, long k);

/// Exact numeric k-th term by iterating the recurrence from the initial values.
Rational numeric_term(SequenceKind kind, long k, const Assignment& at);

/// Annihilator of n -> S(m*n + c), for every offset c: the characteristic
/// polynomial of the m-th power of the companion matrix (m < 0 uses the
/// inverse, whose determinant q^-1 is a unit). m = 0 gives x - 1.
Annihilator slope_annihilator(SequenceKind kind, long m);

}  // namespace horadam
