#pragma once

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "basel/ledger.hpp"

namespace basel::ledger {

inline nlohmann::json to_json(const Report& report) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& o : report.outcomes) {
    steps.push_back({
        {"id", o.step_id},
        {"title", o.title},
        {"paper_ref", o.paper_ref},
        {"computed", o.computed},
        {"expected", o.expected_value},
        {"abs_diff", o.abs_diff},
        {"error_estimate", o.error_estimate},
        {"evaluations", o.evaluations},
        {"elapsed_ms", o.elapsed.count()},
        {"status", std::string(to_string(o.status))},
    });
  }
  return {
      {"artifact_version", report.artifact_version},
      {"summary",
       {{"pass", report.summary.pass},
        {"fail", report.summary.fail},
        {"indeterminate", report.summary.indeterminate}}},
      {"steps", steps},
  };
}

/// One aligned row per step, then a summary line.
inline std::string format_text(const Report& report) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-22s %-13s %24s %24s %10s %10s %12s %11s\n", "id", "status",
                "computed", "expected", "abs_diff", "err_est", "evaluations", "elapsed_ms");
  out += line;
  for (const auto& o : report.outcomes) {
    std::snprintf(line, sizeof line, "%-22s %-13s %24.17g %24.17g %10.3e %10.3e %12zu %11.3f\n",
                  o.step_id.c_str(), std::string(to_string(o.status)).c_str(), o.computed,
                  o.expected_value, o.abs_diff, o.error_estimate, o.evaluations,
                  o.elapsed.count());
    out += line;
    if (o.status != Status::Pass && !o.diagnostics.empty()) {
      out += "    " + o.diagnostics + "\n";
    }
  }
  std::snprintf(line, sizeof line, "summary: %zu pass, %zu fail, %zu indeterminate (version %s)\n",
                report.summary.pass, report.summary.fail, report.summary.indeterminate,
                report.artifact_version.c_str());
  out += line;
  return out;
}

}  // namespace basel::ledger
