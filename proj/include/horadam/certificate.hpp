#pragma once

#include <string>

#include "json.hpp"

#include "horadam/prover.hpp"

namespace horadam {

struct CertificateFormat {
  /// Wall-clock time varies between runs; without it the output is byte-stable.
  bool include_timing = false;
};

/// Keys in fixed order: identity, label, elimination, pins, proof, leaves,
/// verdict, witness/reason, ms. Polynomials use the canonical ring text.
nlohmann::ordered_json to_json(const Certificate& cert, const CertificateFormat& format = {});

std::string render_certificate(const Certificate& cert, const CertificateFormat& format = {});

}  // namespace horadam
