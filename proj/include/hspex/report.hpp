#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hspex {

// One verified claim: a computed value against its target.  'basis' records
// where the target comes from: "closed-form" (a known formula), "definition"
// (immediate from definitions), or "oracle" (an independent computation).
struct CheckRecord {
  std::string claim;
  double computed = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string basis = "oracle";
};

struct RunReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  long wall_ms = 0;
  std::string version;

  bool all_pass() const;
};

// JSON document with a schema marker; stable field order, so reports at a
// fixed seed are byte-identical up to wall_ms.
std::string to_json(const RunReport& report);

// Markdown table mirroring the JSON content.
std::string to_markdown(const RunReport& report);

// Registered experiment names, in registry order.
std::vector<std::string> experiment_names();

// Runs one registered experiment.  Throws validation_error for an unknown
// name; the report itself never throws on failing checks.
RunReport run_experiment(const std::string& name, std::uint64_t seed);

// HSPEX_SEED environment variable when set and parseable, 2026 otherwise.
std::uint64_t default_seed();

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hspex
