#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lexfirst {

/// One disagreement between the two sides of an experiment.
struct ViolationRecord {
  std::string instance;
  nlohmann::json expected;
  nlohmann::json computed;
  nlohmann::json artifacts = nlohmann::json::object();
};

struct ExperimentReport {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t agreements = 0;
  std::vector<ViolationRecord> violations;
  /// Failures of checks that are always gated, independent of `gated`.
  std::vector<ViolationRecord> hard_failures;
  /// Whether violations count against `passed()`.
  bool gated = true;
  /// Deterministic counters only (no wall-clock values).
  nlohmann::json stats = nlohmann::json::object();

  void agree() {
    ++cases;
    ++agreements;
  }
  void disagree(ViolationRecord v) {
    ++cases;
    violations.push_back(std::move(v));
  }

  bool consistent() const { return agreements + violations.size() == cases; }
  bool passed() const { return consistent() && hard_failures.empty() && (!gated || violations.empty()); }

  /// Sorted keys, violations sorted by instance id.
  nlohmann::json to_json() const;
};

/// Zero-padded id so that string order equals numeric order.
std::string instance_id(std::string_view prefix, std::size_t index);

/// Pretty-printed with a trailing newline; key order is already canonical.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace lexfirst
