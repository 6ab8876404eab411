#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symchev/darboux.hpp"
#include "symchev/groebner.hpp"
#include "symchev/grouprep.hpp"

namespace symchev {

struct SchemaError : std::runtime_error {
    SchemaError(const std::string& path, int line, const std::string& msg)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + msg) {}
};

// Names accepted in a `checks` line.
const std::vector<std::string>& known_check_names();

struct DarbouxSection {
    int n = 0;
    int cap = 5;
    QMatrix constant;                                      // skew pair-coefficient matrix
    std::vector<std::tuple<int, int, std::string>> terms;  // (a, b, polynomial in z1..zn), 1-based
};

// One verification scenario: group and representation data, Cartan data,
// requested checks, bounds, budgets and witness candidates.
struct Scenario {
    std::string label;
    std::string summary;
    std::string path;
    bool disabled = false;
    bool weyl_only = false;

    std::vector<std::string> flags;  // declared metadata, echoed into reports
    std::vector<std::string> var_names;
    std::optional<GroupSpec> group;

    bool has_cartan = false;
    std::vector<std::vector<Rat>> c_basis;
    std::vector<std::vector<Rat>> cdual_basis;
    bool derive_cdual = false;  // dual Cartan from the stable-case annihilator
    WeylAction weyl;

    std::vector<std::string> checks;
    int degree_bound = 4;
    int weyl_degree_bound = -1;      // defaults to degree_bound
    int relation_degree_bound = -1;  // defaults to 2 * degree_bound
    int compare_truncation = -1;     // defaults to 2 * degree_bound
    int radical_cap = 4;
    Budget budget;

    std::vector<std::string> witness_texts;
    bool auto_witnesses = false;
    std::vector<std::string> invariant_texts;  // explicit invariant generators
    int expected_dimension = -1;               // overrides dim V + dim c

    std::optional<DarbouxSection> darboux;

    bool has_flag(const std::string& f) const;
    bool wants(const std::string& check) const;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& path_for_errors);

// Bundled corpus handling: *.scn files in a directory, sorted by label.
std::vector<Scenario> load_corpus(const std::string& dir);

}  // namespace symchev
