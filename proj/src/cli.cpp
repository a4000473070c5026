#include "horadam/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "horadam/certificate.hpp"

namespace horadam::cli {

namespace {

namespace fs = std::filesystem;

std::optional<Document> load(const std::string& path, long slope_cap, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot read file\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str(), ParseOptions{slope_cap});
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
    return std::nullopt;
  }
}

std::string describe(const IdentityReport& r) {
  std::string out = r.file + ":" + std::to_string(r.loc.line);
  if (!r.label.empty()) out += " " + r.label;
  return out;
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms << "ms";
  return s.str();
}

std::string format_counterexample(const Counterexample& c, const std::vector<std::string>& vars) {
  std::ostringstream s;
  s << "trial=" << c.trial;
  for (Symbol sym : kAllSymbols) s << " " << symbol_name(sym) << "=" << c.at[sym].get_str();
  for (std::size_t i = 0; i < vars.size(); ++i) s << " " << vars[i] << "=" << c.index_values[i];
  s << " lhs=" << c.lhs.get_str() << " rhs=" << c.rhs.get_str();
  return s.str();
}

/// The requested order restricted to this identity's indices, then any
/// remaining indices in declaration order.
std::vector<std::string> order_for(const Identity& id, const std::vector<std::string>& requested) {
  std::vector<std::string> order;
  for (const auto& name : requested)
    if (std::find(id.vars.begin(), id.vars.end(), name) != id.vars.end() &&
        std::find(order.begin(), order.end(), name) == order.end())
      order.push_back(name);
  for (const auto& v : id.vars)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  return order;
}

std::string certificate_name(const std::string& path, std::size_t ordinal, const std::string& label) {
  std::ostringstream s;
  s << fs::path(path).stem().string() << "-" << std::setw(2) << std::setfill('0') << ordinal;
  if (!label.empty()) {
    s << "-";
    for (char ch : label) s << (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' ? ch : '_');
  }
  s << ".json";
  return s.str();
}

}  // namespace

RunReport cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  RunReport report;
  bool oracle_disagreement = false;
  if (options.cert_out) {
    std::error_code ec;
    fs::create_directories(*options.cert_out, ec);
    if (ec) {
      err << *options.cert_out << ": error: cannot create certificate directory: " << ec.message() << "\n";
      report.exit_code = kExitError;
      return report;
    }
  }
  for (const auto& path : options.paths) {
    auto doc = load(path, options.slope_cap, err);
    if (!doc) {
      ++report.errors;
      continue;
    }
    std::size_t ordinal = 0;
    for (const auto& id : doc->identities) {
      ++ordinal;
      IdentityReport r;
      r.file = path;
      r.loc = id.loc;
      r.label = id.label;
      Certificate cert = prove(id, order_for(id, options.elim_order), ProverConfig{options.max_order});
      r.verdict = cert.verdict;
      r.leaves = cert.leaves.size();
      r.ms = cert.ms;
      auto elims = cert.eliminations();
      if (!elims.empty()) r.root_order = elims.front()->annihilator.order();
      for (const auto* e : elims) r.max_order = std::max(r.max_order, e->annihilator.order());

      switch (cert.verdict) {
        case Verdict::Proved: ++report.proved; break;
        case Verdict::Refuted: ++report.refuted; break;
        case Verdict::Aborted: ++report.aborted; break;
      }

      if (options.cert_out) {
        fs::path file = fs::path(*options.cert_out) / certificate_name(path, ordinal, id.label);
        std::ofstream cert_file(file, std::ios::binary);
        cert_file << render_certificate(cert, CertificateFormat{options.timing});
        if (!cert_file) {
          err << file.string() << ": error: cannot write certificate\n";
          ++report.errors;
        }
        r.certificate_path = file.string();
      }

      out << describe(r) << " " << to_string(cert.verdict);
      if (cert.verdict == Verdict::Aborted) {
        out << " (" << cert.reason << ")";
        err << describe(r) << ": error: " << cert.reason << "\n";
      } else {
        out << " order=" << r.root_order << " max-order=" << r.max_order << " leaves=" << r.leaves;
      }
      if (cert.verdict == Verdict::Refuted)
        out << " witness=" << cert.leaves[*cert.witness].value.str();
      out << " " << format_ms(r.ms) << "\n";

      if (options.fuzz_after && cert.verdict == Verdict::Proved) {
        r.fuzz = fuzz(id, options.fuzz);
        if (!r.fuzz->passed()) {
          oracle_disagreement = true;
          err << describe(r) << ": error: proved but the numeric oracle found a counterexample: "
              << format_counterexample(*r.fuzz->counterexample, id.vars) << "\n";
        }
      }
      report.identities.push_back(std::move(r));
    }
  }
  out << "total " << report.identities.size() << ": proved " << report.proved << ", refuted " << report.refuted
      << ", aborted " << report.aborted << "\n";
  if (report.errors > 0 || report.aborted > 0 || oracle_disagreement)
    report.exit_code = kExitError;
  else if (report.refuted > 0)
    report.exit_code = kExitFailed;
  return report;
}

RunReport cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err) {
  RunReport report;
  if (options.fuzz.trials == 0) {
    err << "error: --trials must be at least 1\n";
    report.exit_code = kExitError;
    return report;
  }
  for (const auto& path : options.paths) {
    auto doc = load(path, options.slope_cap, err);
    if (!doc) {
      ++report.errors;
      continue;
    }
    for (const auto& id : doc->identities) {
      IdentityReport r;
      r.file = path;
      r.loc = id.loc;
      r.label = id.label;
      r.fuzz = fuzz(id, options.fuzz);
      if (r.fuzz->passed()) {
        ++report.passed;
        out << describe(r) << " PASS trials=" << r.fuzz->trials_run << "\n";
      } else {
        ++report.counterexamples;
        out << describe(r) << " COUNTEREXAMPLE " << format_counterexample(*r.fuzz->counterexample, id.vars) << "\n";
      }
      report.identities.push_back(std::move(r));
    }
  }
  out << "total " << report.identities.size() << ": pass " << report.passed << ", counterexamples "
      << report.counterexamples << "\n";
  if (report.errors > 0)
    report.exit_code = kExitError;
  else if (report.counterexamples > 0)
    report.exit_code = kExitFailed;
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recurrence-based prover for generalized Fibonacci identities", "horadam"};
  app.require_subcommand(1);

  VerifyOptions verify;
  std::string elim_order;
  auto* verify_cmd = app.add_subcommand("verify", "Prove every identity in the given files");
  verify_cmd->add_option("files", verify.paths, "Identity files")->required();
  verify_cmd->add_option("--cert-out", verify.cert_out, "Write one JSON certificate per identity into DIR");
  verify_cmd->add_option("--elim-order", elim_order, "Index elimination order, e.g. m,n,k");
  verify_cmd->add_option("--max-order", verify.max_order, "Annihilator order cap")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--slope-cap", verify.slope_cap, "Largest index coefficient accepted by the parser");
  verify_cmd->add_flag("--fuzz-after", verify.fuzz_after, "Run the numeric oracle on every proved identity");
  verify_cmd->add_flag("--timing", verify.timing, "Record wall-clock time in certificates");
  verify_cmd->add_option("--seed", verify.fuzz.seed, "Fuzz seed");
  verify_cmd->add_option("--trials", verify.fuzz.trials, "Fuzz trials")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--range", verify.fuzz.range, "Fuzz range for scalars and indices")->check(CLI::NonNegativeNumber);

  FuzzOptions fuzz_opts;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check identities numerically at random points");
  fuzz_cmd->add_option("files", fuzz_opts.paths, "Identity files")->required();
  fuzz_cmd->add_option("--trials", fuzz_opts.fuzz.trials, "Number of random points")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz_opts.fuzz.seed, "Random seed");
  fuzz_cmd->add_option("--range", fuzz_opts.fuzz.range, "Values are drawn from [-R, R]")->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--slope-cap", fuzz_opts.slope_cap, "Largest index coefficient accepted by the parser");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*verify_cmd) {
    std::stringstream names(elim_order);
    for (std::string name; std::getline(names, name, ',');) {
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (!name.empty()) verify.elim_order.push_back(name);
    }
    return cmd_verify(verify, out, err).exit_code;
  }
  return cmd_fuzz(fuzz_opts, out, err).exit_code;
}

}  // namespace horadam::cli
