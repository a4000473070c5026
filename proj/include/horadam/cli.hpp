#pragma once

// Command-line front end.
//
//   horadam verify [--cert-out DIR] [--elim-order m,n,k] [--max-order K]
//                  [--fuzz-after] [--seed S] [--trials N] [--range R] FILE...
//   horadam fuzz   [--trials N] [--seed S] [--range R] FILE...
//
// verify exits 0 when every identity is proved, 1 when any is refuted and 2 on
// errors (unreadable file, parse error, order cap). fuzz exits 0 when every
// identity passes, 1 on any counterexample and 2 on errors.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "horadam/lang.hpp"
#include "horadam/prover.hpp"

namespace horadam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitError = 2;

struct VerifyOptions {
  std::vector<std::string> paths;
  std::optional<std::string> cert_out;
  std::vector<std::string> elim_order;
  std::size_t max_order = 64;
  bool fuzz_after = false;
  FuzzConfig fuzz;
  bool timing = false;
  long slope_cap = 8;
};

struct FuzzOptions {
  std::vector<std::string> paths;
  FuzzConfig fuzz;
  long slope_cap = 8;
};

struct IdentityReport {
  std::string file;
  SourceLoc loc;
  std::string label;
  std::optional<Verdict> verdict;       // verify only
  std::size_t root_order = 0;  // order of the first eliminated index's annihilator
  std::size_t max_order = 0;   // largest order anywhere in the proof
  std::size_t leaves = 0;
  std::optional<FuzzResult> fuzz;
  std::string certificate_path;
  double ms = 0;
};

struct RunReport {
  std::vector<IdentityReport> identities;
  std::size_t proved = 0;
  std::size_t refuted = 0;
  std::size_t aborted = 0;
  std::size_t passed = 0;
  std::size_t counterexamples = 0;
  std::size_t errors = 0;  // files that could not be read or parsed
  int exit_code = kExitOk;
};

RunReport cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
RunReport cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace horadam::cli
