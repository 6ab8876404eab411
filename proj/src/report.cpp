#include "symchev/report.hpp"

#include <sstream>

namespace symchev {

std::string overall_verdict(const std::vector<CheckRecord>& checks) {
    bool any_inconclusive = false, any_fail = false, any_witness = false, surj_fail = false;
    for (const auto& c : checks) {
        if (c.status == "inconclusive") any_inconclusive = true;
        if (c.status == "witness-found") any_witness = true;
        if (c.status == "fail" || c.status == "error") {
            any_fail = true;
            if (c.name == "restriction" && c.evidence.contains("surjectivity_failed") &&
                c.evidence["surjectivity_failed"].get<bool>())
                surj_fail = true;
        }
    }
    if (surj_fail) return "surjectivity-failed";
    if (any_witness) return "non-reduced-witness-found";
    if (any_fail) return "check-failed";
    if (any_inconclusive) return "inconclusive";
    return "consistent-with-conjecture";
}

Json report_to_json(const Report& r, bool include_runtime) {
    Json j;
    j["schema"] = "symchev-report-v1";
    j["label"] = r.label;
    j["tool_version"] = r.tool_version;
    j["conventions"] = Json{{"bracket", r.bracket_convention}, {"moment", r.moment_convention}};
    j["flags"] = r.flags;
    j["overall"] = r.overall;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["status"] = c.status;
        cj["detail"] = c.detail;
        cj["evidence"] = c.evidence;
        if (include_runtime) cj["runtime"] = Json{{"seconds", c.seconds}};
        checks.push_back(cj);
    }
    j["checks"] = checks;
    if (include_runtime)
        j["runtime"] = Json{{"total_seconds", r.total_seconds},
                            {"cache_hits", r.cache_hits},
                            {"cache_misses", r.cache_misses}};
    return j;
}

Report report_from_json(const Json& j) {
    if (!j.contains("schema") || j["schema"] != "symchev-report-v1")
        throw std::runtime_error("report_from_json: unknown schema");
    Report r;
    r.label = j.value("label", "");
    r.tool_version = j.value("tool_version", "");
    if (j.contains("conventions")) {
        r.bracket_convention = j["conventions"].value("bracket", "");
        r.moment_convention = j["conventions"].value("moment", "");
    }
    if (j.contains("flags")) r.flags = j["flags"].get<std::vector<std::string>>();
    r.overall = j.value("overall", "");
    for (const auto& cj : j.value("checks", Json::array())) {
        CheckRecord c;
        c.name = cj.value("name", "");
        c.status = cj.value("status", "");
        c.detail = cj.value("detail", "");
        c.evidence = cj.value("evidence", Json::object());
        if (cj.contains("runtime")) c.seconds = cj["runtime"].value("seconds", 0.0);
        r.checks.push_back(std::move(c));
    }
    if (j.contains("runtime")) {
        r.total_seconds = j["runtime"].value("total_seconds", 0.0);
        r.cache_hits = j["runtime"].value("cache_hits", 0);
        r.cache_misses = j["runtime"].value("cache_misses", 0);
    }
    return r;
}

namespace {

void render_evidence(std::ostream& os, const Json& ev, int indent) {
    std::string pad(indent, ' ');
    if (ev.is_object()) {
        for (auto it = ev.begin(); it != ev.end(); ++it) {
            if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
                os << pad << it.key() << ":\n";
                for (const auto& row : it.value()) os << pad << "  " << row.dump() << "\n";
            } else if (it.value().is_object()) {
                os << pad << it.key() << ":\n";
                render_evidence(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << " = " << it.value().dump() << "\n";
            }
        }
    }
}

}  // namespace

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "scenario " << r.label << "\n";
    os << "verdict  " << r.overall << "\n";
    os << "flags   ";
    for (const auto& f : r.flags) os << " " << f;
    os << "\n";
    os << "conventions: bracket: " << r.bracket_convention << "; moment: " << r.moment_convention << "\n";
    for (const auto& c : r.checks) {
        os << "\n[" << c.status << "] " << c.name;
        if (c.seconds > 0) os << "  (" << c.seconds << " s)";
        os << "\n";
        if (!c.detail.empty()) os << "  " << c.detail << "\n";
        render_evidence(os, c.evidence, 2);
    }
    os << "\noverall: " << r.overall << "\n";
    return os.str();
}

int exit_code_for_overall(const std::string& overall) {
    if (overall == "consistent-with-conjecture") return 0;
    if (overall == "inconclusive") return 2;
    return 1;
}

}  // namespace symchev
