#include "horadam/certificate.hpp"

namespace horadam {

namespace {

using nlohmann::ordered_json;

ordered_json instantiation_json(const Instantiation& at) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : at) j[name] = value;
  return j;
}

ordered_json subgoal_json(const Subgoal& s, const std::vector<std::string>& vars) {
  ordered_json j;
  j["at"] = instantiation_json(s.at);
  j["goal"] = s.goal.render(vars) + " == 0";
  if (s.leaf) j["leaf"] = *s.leaf;
  for (const auto& e : s.next) {
    ordered_json step;
    step["index"] = e.index;
    step["order"] = e.annihilator.order();
    step["charpoly"] = e.annihilator.str();
    ordered_json children = ordered_json::array();
    for (const auto& child : e.subgoals) children.push_back(subgoal_json(child, vars));
    step["subgoals"] = std::move(children);
    j["step"] = std::move(step);
  }
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const Certificate& cert, const CertificateFormat& format) {
  ordered_json j;
  j["identity"] = cert.identity;
  j["label"] = cert.label;
  j["elimination"] = cert.elimination;
  ordered_json pins = ordered_json::object();
  for (const auto& [s, v] : cert.pins) pins[std::string(symbol_name(s))] = v.get_str();
  j["pins"] = std::move(pins);
  j["proof"] = subgoal_json(cert.root, cert.vars);
  ordered_json leaves = ordered_json::array();
  for (const auto& leaf : cert.leaves) {
    ordered_json l;
    l["at"] = instantiation_json(leaf.at);
    l["value"] = leaf.value.str();
    l["zero"] = leaf.is_zero();
    leaves.push_back(std::move(l));
  }
  j["leaves"] = std::move(leaves);
  j["verdict"] = std::string(to_string(cert.verdict));
  if (cert.witness) j["witness"] = *cert.witness;
  if (cert.verdict == Verdict::Aborted) j["reason"] = cert.reason;
  j["ms"] = format.include_timing ? ordered_json(cert.ms) : ordered_json(nullptr);
  return j;
}

std::string render_certificate(const Certificate& cert, const CertificateFormat& format) {
  return to_json(cert, format).dump(2) + "\n";
}

}  // namespace horadam
