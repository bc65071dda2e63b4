#include "lexfirst/report.hpp"

#include <algorithm>
#include <cstdio>

namespace lexfirst {

using nlohmann::json;

namespace {

json records_to_json(std::vector<ViolationRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ViolationRecord& a, const ViolationRecord& b) { return a.instance < b.instance; });
  json out = json::array();
  for (const auto& r : records) {
    out.push_back(json{{"instance", r.instance},
                       {"expected", r.expected},
                       {"computed", r.computed},
                       {"artifacts", r.artifacts}});
  }
  return out;
}

}  // namespace

json ExperimentReport::to_json() const {
  json j;
  j["experiment"] = id;
  j["seed"] = seed;
  j["cases"] = cases;
  j["agreements"] = agreements;
  j["agreement_rate"] = cases == 0 ? 1.0 : static_cast<double>(agreements) / static_cast<double>(cases);
  j["violations"] = records_to_json(violations);
  j["hard_failures"] = records_to_json(hard_failures);
  j["gated"] = gated;
  j["passed"] = passed();
  j["stats"] = stats;
  return j;
}

std::string instance_id(std::string_view prefix, std::size_t index) {
  char digits[32];
  std::snprintf(digits, sizeof digits, "%05zu", index);
  return std::string(prefix) + "-" + digits;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace lexfirst
