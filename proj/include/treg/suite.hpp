#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace treg {

// One verified identity: an expected and a computed canonical form.
struct CheckResult {
  std::string id;
  std::string anchor;  // the identity in words
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct RunReport {
  std::uint64_t seed = 0;
  std::string filter;
  std::vector<CheckResult> results;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

inline constexpr std::uint64_t kSuiteSeed = 1009;

// Runs the full battery of golden formulas (c1..c8), randomized property
// suites (c9) and whole-family certifications (c10). `filter` selects check
// ids: a glob when it contains '*' or '?', a substring match otherwise.
// Reports are deterministic: same seed and filter, same bytes.
RunReport run_reference_suite(std::uint64_t seed = kSuiteSeed, const std::string& filter = "");

std::string report_to_text(const RunReport& rep);
nlohmann::json report_to_json(const RunReport& rep);

}  // namespace treg
