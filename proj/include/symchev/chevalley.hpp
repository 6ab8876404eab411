#pragma once

#include <optional>

#include "symchev/cache.hpp"
#include "symchev/hilbert.hpp"
#include "symchev/invariants.hpp"
#include "symchev/poisson.hpp"

namespace symchev {

// Presentation of an invariant subalgebra: generators on the source ring and
// their relation ideal in tag variables graded by generator degree.
struct ReductionPresentation {
    RingPtr source_ring;
    std::vector<Poly> generators;
    std::vector<int> degrees;
    Ideal relations;     // tag ring, weight of T_k = degrees[k]
    bool partial = false;  // relations truncated at `truncation` (budget fallback)
    int truncation = 0;
    std::string route;  // "subalgebra-elimination" | "linear-algebra" | trailing "+weyl-quotient"
};

// Relations among the invariant generators modulo the moment ideal. Primary
// route is tag-variable elimination; on budget exhaustion it falls back to
// degree-by-degree linear algebra on normal forms and marks the result
// partial. Substituting the generators into every relation must give normal
// form zero; that is checked before returning.
ReductionPresentation reduction_presentation_big(const InvariantBasis& inv, const Ideal& moment,
                                                 int relation_degree_bound, const Budget& budget = {},
                                                 GbCache* cache = nullptr, Exec exec = default_exec());

// Generators and relations of the Weyl-invariant ring on c + c_dual.
ReductionPresentation weyl_quotient_presentation(const CartanData& cd, int degree_bound,
                                                 const Budget& budget = {}, GbCache* cache = nullptr,
                                                 Exec exec = default_exec());

struct SurjectivityRow {
    int degree = 0;
    int source_dim = 0;
    int restricted_dim = 0;
    int target_dim = 0;
    bool surjective = false;
};

// Per degree: restrict the source invariants to c + c_dual and compare the
// span with the target invariants. Restricted invariants are also checked to
// be Weyl-fixed (they must be; a failure indicates inconsistent Cartan data).
std::vector<SurjectivityRow> surjectivity_check(const InvariantBasis& source, const CartanData& cd,
                                                const InvariantBasis& target, int degree_bound,
                                                Exec exec = default_exec());

struct ReducednessResult {
    Poly candidate;
    bool in_ideal = false;
    bool in_radical = false;
    std::optional<int> exponent;  // smallest k with candidate^k in the ideal
    bool via_rabinowitsch = false;
    bool witness() const { return !in_ideal && in_radical; }
};

std::vector<ReducednessResult> reducedness_probe(const Ideal& moment, const std::vector<Poly>& candidates,
                                                 int cap = 4, const Budget& budget = {}, GbCache* cache = nullptr);

// Candidate pool assembled from the computed generators: all monomials in
// the generators up to the ambient degree cap plus the 2x2 determinant
// combinations g_i g_l - g_j g_k of matching degree (the inspection pattern
// behind witnesses like AC - B^2).
std::vector<Poly> auto_witness_candidates(const InvariantBasis& inv, int max_degree);

struct DimensionResult {
    int computed = -1;
    int expected = -1;
    bool match = false;
};

DimensionResult dimension_check(const Ideal& moment, int expected, const Budget& budget = {},
                                GbCache* cache = nullptr);

struct PresentationMatch {
    bool generator_degrees_match = false;
    bool relation_degrees_match = false;
    bool hilbert_series_match = false;
    int truncation = 0;
    std::vector<int> gen_degrees_a, gen_degrees_b;
    std::vector<int> rel_degrees_a, rel_degrees_b;
    std::vector<Int> series_a, series_b;
    bool all() const { return generator_degrees_match && relation_degrees_match && hilbert_series_match; }
};

// Graded-proxy comparison only: generator degrees, minimal relation degrees
// (up to the truncation) and Hilbert series of the two presented quotients.
PresentationMatch compare_presentations(const ReductionPresentation& a, const ReductionPresentation& b,
                                        int truncation, const Budget& budget = {}, GbCache* cache = nullptr,
                                        Exec exec = default_exec());

// Minimal generator degrees of a homogeneous ideal up to a degree bound,
// by degreewise linear algebra.
std::vector<int> minimal_generator_degrees(const Ideal& ideal, int degree_bound, Exec exec = default_exec());

// Per-degree dimensions of the presented quotient ring, from the relation
// ideal's Hilbert series.
std::vector<Int> presentation_quotient_dims(const ReductionPresentation& p, int truncation,
                                            const Budget& budget = {}, GbCache* cache = nullptr);

}  // namespace symchev
