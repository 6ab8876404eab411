#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace symchev {

using Json = nlohmann::json;

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | witness-found | inconclusive | skipped | error
    std::string detail;
    Json evidence = Json::object();
    double seconds = 0.0;
};

// Scenario outcome. The machine-readable and human-readable renderings carry
// the same verdicts; timings and cache counters live in a separate section
// so determinism comparisons can strip them.
struct Report {
    std::string label;
    std::string tool_version;
    std::string bracket_convention;
    std::string moment_convention;
    std::vector<std::string> flags;
    std::vector<CheckRecord> checks;
    std::string overall;
    double total_seconds = 0.0;
    int cache_hits = 0;
    int cache_misses = 0;
};

// Verdict precedence: surjectivity failure, then a reducedness witness, then
// any other failure, then budget-inconclusive, else consistent.
std::string overall_verdict(const std::vector<CheckRecord>& checks);

Json report_to_json(const Report& r, bool include_runtime = true);
Report report_from_json(const Json& j);
std::string report_to_text(const Report& r);

// 0 all consistent; 1 witness or failure present; 2 inconclusive only.
int exit_code_for_overall(const std::string& overall);

}  // namespace symchev
