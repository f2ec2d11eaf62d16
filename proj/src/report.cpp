#include "hspex/report.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "hspex/errors.hpp"

namespace hspex {

bool RunReport::all_pass() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string to_json(const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["experiment"] = report.experiment;
  doc["seed"] = report.seed;
  doc["version"] = report.version;
  doc["wall_ms"] = report.wall_ms;
  doc["pass"] = report.all_pass();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::ordered_json rec;
    rec["claim"] = c.claim;
    rec["computed"] = c.computed;
    rec["target"] = c.target;
    rec["tolerance"] = c.tolerance;
    rec["pass"] = c.pass;
    rec["basis"] = c.basis;
    doc["checks"].push_back(std::move(rec));
  }
  return doc.dump(2);
}

std::string to_markdown(const RunReport& report) {
  std::ostringstream out;
  out << "# " << report.experiment << " — " << (report.all_pass() ? "PASS" : "FAIL")
      << "\n\n";
  out << "seed " << report.seed << ", " << report.wall_ms << " ms, version "
      << report.version << "\n\n";
  out << "| claim | computed | target | tolerance | basis | pass |\n";
  out << "|---|---|---|---|---|---|\n";
  out.precision(12);
  for (const CheckRecord& c : report.checks) {
    out << "| " << c.claim << " | " << c.computed << " | " << c.target << " | "
        << c.tolerance << " | " << c.basis << " | " << (c.pass ? "yes" : "NO")
        << " |\n";
  }
  return out.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HSPEX_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
  }
  return 2026u;
}

}  // namespace hspex
