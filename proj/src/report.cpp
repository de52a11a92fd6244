#include "hstrace/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hstrace {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Verified: return "verified";
    case Outcome::Refuted: return "refuted";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool any_refuted(const std::vector<TheoremReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.outcome == Outcome::Refuted; });
}

AlgebraSummary summarize(const Algebra& a) {
  AlgebraSummary s;
  s.dim = a.dim();
  s.loewy_length = a.loewy_length();
  for (std::size_t j = 0; j < s.loewy_length; ++j)
    s.layer_dims.push_back(a.radical_power(j).dim() - a.radical_power(j + 1).dim());
  s.commutator_dim = a.hh0().commutators().dim();
  s.hh0_dim = a.hh0().dim();
  for (auto k : a.hh0().complement()) s.hh0_basis.push_back(a.labels()[k]);
  for (std::size_t i = 0; i < a.num_vertices(); ++i) s.loops.push_back(a.loops_at(i));
  return s;
}

nlohmann::ordered_json to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["instance"] = r.instance;
  j["outcome"] = to_string(r.outcome);
  j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.witnesses) w.push_back({{"key", k}, {"value", v}});
  j["witnesses"] = std::move(w);
  return j;
}

nlohmann::ordered_json to_json(const AlgebraSummary& s) {
  nlohmann::ordered_json j;
  j["dim"] = s.dim;
  j["loewy_length"] = s.loewy_length;
  j["layer_dims"] = s.layer_dims;
  j["commutator_dim"] = s.commutator_dim;
  j["hh0_dim"] = s.hh0_dim;
  j["hh0_basis"] = s.hh0_basis;
  j["loops"] = s.loops;
  return j;
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["arguments"] = r.arguments;
  if (r.algebra) j["algebra"] = to_json(*r.algebra);
  if (!r.result.empty()) j["result"] = r.result;
  if (r.command == "verify") {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : r.checks) {
      checks.push_back(to_json(c));
      ++counts[static_cast<int>(c.outcome)];
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"verified", counts[0]}, {"refuted", counts[1]}, {"inconclusive", counts[2]}};
  }
  return j.dump(2) + "\n";
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (r.algebra) {
    const auto& s = *r.algebra;
    os << "dim " << s.dim << "\n"
       << "loewy length " << s.loewy_length << "\n"
       << "radical layers " << join(s.layer_dims) << "\n"
       << "dim [A,A] " << s.commutator_dim << "\n"
       << "dim HH0 " << s.hh0_dim << "\n"
       << "loops " << join(s.loops) << "\n";
  }
  for (const auto& [k, v] : r.result.items()) os << k << " " << scalar_text(v) << "\n";
  if (r.command == "verify") {
    std::size_t refuted = 0;
    for (const auto& c : r.checks) {
      os << to_string(c.outcome);
      if (c.bound) os << "(" << *c.bound << ")";
      os << "  " << c.id << "  " << c.instance << "\n";
      for (const auto& [k, v] : c.witnesses) os << "    " << k << ": " << v << "\n";
      if (c.outcome == Outcome::Refuted) ++refuted;
    }
    os << r.checks.size() << " checks, " << refuted << " refuted\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed %.0f ms\n", r.elapsed_ms);
    os << buf;
  }
  return os.str();
}

}  // namespace hstrace
