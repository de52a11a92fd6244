#pragma once

#include "hstrace/algebra.hpp"
#include "hstrace/theorem.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hstrace {

struct AlgebraSummary {
  std::size_t dim = 0;
  std::size_t loewy_length = 0;
  std::vector<std::size_t> layer_dims;  // dim J^j / J^{j+1}
  std::size_t commutator_dim = 0;
  std::size_t hh0_dim = 0;
  std::vector<std::string> hh0_basis;  // labels at the complement positions
  std::vector<std::size_t> loops;
};

AlgebraSummary summarize(const Algebra& a);

/// Output of one command. `result` holds command-specific values; `checks`
/// the theorem reports of `verify`. Elapsed time is shown in text only so
/// that JSON stays byte-identical across runs.
struct Report {
  std::string command;
  nlohmann::ordered_json arguments = nlohmann::ordered_json::object();
  std::optional<AlgebraSummary> algebra;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<TheoremReport> checks;
  double elapsed_ms = 0;
};

nlohmann::ordered_json to_json(const TheoremReport& r);
nlohmann::ordered_json to_json(const AlgebraSummary& s);
std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace hstrace
