#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hstrace {

enum class Outcome { Verified, Refuted, Inconclusive };

std::string to_string(Outcome o);

/// Result of one executable check. Witnesses are ordered (key, value) pairs
/// so that serialized reports are reproducible.
struct TheoremReport {
  std::string id;
  std::string instance;
  Outcome outcome = Outcome::Verified;
  std::optional<std::size_t> bound;  // set for inconclusive outcomes
  std::vector<std::pair<std::string, std::string>> witnesses;

  TheoremReport& witness(std::string key, std::string value) {
    witnesses.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  /// Marks the report refuted and records why.
  TheoremReport& refute(std::string key, std::string value) {
    outcome = Outcome::Refuted;
    return witness(std::move(key), std::move(value));
  }
};

bool any_refuted(const std::vector<TheoremReport>& reports);

}  // namespace hstrace
