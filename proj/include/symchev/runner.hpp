#pragma once

#include <memory>

#include "symchev/cache.hpp"
#include "symchev/report.hpp"
#include "symchev/scenario.hpp"

namespace symchev {

inline constexpr const char* kToolVersion = "symchev 1.0.0";
inline constexpr const char* kBracketConvention =
    "{f,g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i); {x_i,y_j} = delta_ij";
inline constexpr const char* kMomentConvention =
    "mu^A(v+phi) = phi(Av) (equals (1/2)omega(m, Am) on the double)";

struct RunOptions {
    int degree_bound_override = -1;
    std::uint64_t budget_steps_override = 0;  // 0 = use scenario value
    double budget_seconds_override = 0.0;
    GbCache* cache = nullptr;
    Exec exec = default_exec();
};

// Executes the requested checks in dependency order. No failure below the
// I/O layer escapes: every problem becomes a report entry.
Report run_scenario(const Scenario& sc, const RunOptions& opt = {});

// Scenario-level parallelism; reports come back in input order regardless of
// the worker count.
std::vector<Report> run_scenarios(const std::vector<Scenario>& scs, const RunOptions& opt, int workers);

}  // namespace symchev
