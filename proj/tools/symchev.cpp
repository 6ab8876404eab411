// Command-line front end: run verification scenarios, list the bundled
// corpus, re-render saved reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "symchev/runner.hpp"

using namespace symchev;

namespace {

std::string resolve_corpus_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SYMCHEV_CORPUS_DIR")) return env;
    if (std::filesystem::is_directory("scenarios")) return "scenarios";
    return SYMCHEV_SCENARIO_DIR;
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SYMCHEV_CACHE_DIR")) return env;
    return {};
}

Scenario find_scenario(const std::string& name, const std::string& corpus_dir) {
    if (std::filesystem::is_regular_file(name)) return load_scenario(name);
    for (auto& sc : load_corpus(corpus_dir))
        if (sc.label == name) return sc;
    throw std::runtime_error("no scenario file or corpus label '" + name + "'");
}

int aggregate_exit(const std::vector<Report>& reports) {
    bool fail = false, inconclusive = false;
    for (const auto& r : reports) {
        int c = exit_code_for_overall(r.overall);
        if (c == 1) fail = true;
        if (c == 2) inconclusive = true;
    }
    if (fail) return 1;
    if (inconclusive) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic reduction / Chevalley restriction workbench"};
    app.require_subcommand(1);

    std::string corpus_flag, cache_flag;
    app.add_option("--corpus-dir", corpus_flag, "scenario corpus directory");

    // run
    auto* run = app.add_subcommand("run", "run scenarios and print reports");
    std::vector<std::string> names;
    bool run_all = false, include_disabled = false;
    int degree_bound = -1, workers = 1;
    long budget_steps = 0;
    double budget_seconds = 0;
    std::string format = "text", output, run_cache_flag;
    run->add_option("scenario", names, "scenario file paths or corpus labels");
    run->add_flag("--all", run_all, "run the whole corpus (enabled scenarios)");
    run->add_flag("--include-disabled", include_disabled, "also run scenarios marked disabled");
    run->add_option("--degree-bound", degree_bound, "override the scenario degree bound");
    run->add_option("--budget-steps", budget_steps, "override the reduction step budget");
    run->add_option("--budget-seconds", budget_seconds, "override the wall-clock budget");
    run->add_option("--format", format, "report format: text or json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--output", output, "also write the JSON reports to this file");
    run->add_option("--cache-dir", run_cache_flag, "Groebner cache directory (or SYMCHEV_CACHE_DIR)");
    run->add_option("--workers", workers, "scenario-level parallelism");

    // list
    auto* list = app.add_subcommand("list", "list the bundled corpus");
    std::string flag_filter;
    list->add_option("--flag", flag_filter, "only scenarios carrying this declared flag");

    // report
    auto* report_cmd = app.add_subcommand("report", "re-render a saved JSON report as text");
    std::string report_path;
    report_cmd->add_option("saved", report_path, "saved report (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& sc : load_corpus(resolve_corpus_dir(corpus_flag))) {
                if (!flag_filter.empty() && !sc.has_flag(flag_filter)) continue;
                std::cout << sc.label << (sc.disabled ? "  [disabled]" : "") << "\n    " << sc.summary << "\n";
            }
            return 0;
        }

        if (report_cmd->parsed()) {
            std::ifstream in(report_path);
            if (!in) throw std::runtime_error("cannot open '" + report_path + "'");
            Json j = Json::parse(in);
            if (j.is_array()) {
                for (const auto& rj : j) std::cout << report_to_text(report_from_json(rj)) << "\n";
            } else {
                std::cout << report_to_text(report_from_json(j)) << "\n";
            }
            return 0;
        }

        // run
        std::vector<Scenario> scenarios;
        if (run_all) {
            for (auto& sc : load_corpus(resolve_corpus_dir(corpus_flag)))
                if (!sc.disabled || include_disabled) scenarios.push_back(std::move(sc));
        }
        for (const auto& n : names) scenarios.push_back(find_scenario(n, resolve_corpus_dir(corpus_flag)));
        if (scenarios.empty()) throw std::runtime_error("no scenarios selected (give labels or --all)");

        RunOptions opt;
        opt.degree_bound_override = degree_bound;
        if (budget_steps > 0) opt.budget_steps_override = static_cast<std::uint64_t>(budget_steps);
        if (budget_seconds > 0) opt.budget_seconds_override = budget_seconds;
        std::unique_ptr<GbCache> cache;
        std::string cache_dir = resolve_cache_dir(run_cache_flag);
        if (!cache_dir.empty()) {
            cache = std::make_unique<GbCache>(cache_dir);
            opt.cache = cache.get();
        }

        std::vector<Report> reports = run_scenarios(scenarios, opt, workers);

        if (format == "json") {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& r : reports) std::cout << report_to_text(r) << "\n";
        }
        if (!output.empty()) {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            std::ofstream out(output);
            out << arr.dump(2) << "\n";
        }
        return aggregate_exit(reports);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
