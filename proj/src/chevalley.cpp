#include "symchev/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace symchev {

namespace {

RingPtr tag_ring_for(const std::vector<int>& degrees) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        names.push_back("T" + std::to_string(k + 1));
        weights.push_back(std::max(degrees[k], 1));
    }
    return make_ring(std::move(names), std::move(weights));
}

// All tag monomials of a given weighted degree.
std::vector<Monomial> tag_monomials(const RingPtr& tring, int wdeg) {
    std::vector<Monomial> out;
    const int s = tring->nvars();
    Monomial cur(s);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == s) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        int w = tring->weights()[var];
        for (int e = 0; e * w <= remaining; ++e) {
            cur.e[var] = static_cast<std::uint16_t>(e);
            rec(var + 1, remaining - e * w);
        }
        cur.e[var] = 0;
        return;
    };
    rec(0, wdeg);
    MonomialOrder ord = tring->grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    return out;
}

Poly evaluate_tag_monomial(const Monomial& tm, const std::vector<Poly>& gens, const RingPtr& source) {
    Poly prod = Poly::constant(source, Rat(1));
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (tm.e[k]) prod = prod * gens[k].pow(tm.e[k]);
    return prod;
}

// Relations by degreewise linear algebra on normal forms: the kernel of
// T-degree-d monomials -> NF of the evaluated products, reduced by the
// multiples of lower-degree relations.
Ideal relations_by_linear_algebra(const GroebnerBasis& gb, const std::vector<Poly>& gens,
                                  const RingPtr& tring, int degree_bound, Exec exec) {
    std::vector<Poly> relations;
    std::map<int, std::vector<Poly>> relations_by_degree;
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Monomial> tms = tag_monomials(tring, d);
        if (tms.empty()) continue;
        std::vector<Poly> nfs(tms.size());
        if (exec == Exec::Omp) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t i = 0; i < tms.size(); ++i)
                nfs[i] = normal_form(evaluate_tag_monomial(tms[i], gens, gb.ring), gb);
        } else {
            for (std::size_t i = 0; i < tms.size(); ++i)
                nfs[i] = normal_form(evaluate_tag_monomial(tms[i], gens, gb.ring), gb);
        }
        // kernel of the coefficient matrix = linear relations among the NFs
        MonomialOrder ord = gb.ring->grevlex();
        std::vector<Monomial> cols;
        for (const auto& p : nfs)
            for (const auto& t : p.terms()) cols.push_back(t.m);
        std::sort(cols.begin(), cols.end(),
                  [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        auto col_of = [&](const Monomial& m) {
            auto it = std::lower_bound(cols.begin(), cols.end(), m,
                                       [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
            return static_cast<int>(it - cols.begin());
        };
        QMatrix sys(static_cast<int>(cols.size()), static_cast<int>(tms.size()));
        for (int j = 0; j < sys.cols(); ++j)
            for (const auto& t : nfs[static_cast<std::size_t>(j)].terms()) sys.at(col_of(t.m), j) = t.c;

        std::vector<Poly> kernel_polys;
        for (const auto& v : rat_kernel(sys, exec)) {
            std::vector<Term> terms;
            for (std::size_t j = 0; j < tms.size(); ++j)
                if (!is_zero(v[j])) terms.push_back({tms[j], v[j]});
            kernel_polys.push_back(Poly::from_terms(tring, std::move(terms)));
        }
        if (kernel_polys.empty()) continue;
        // quotient out multiples of lower-degree relations
        std::vector<Poly> old_multiples;
        for (const auto& [rd, rels] : relations_by_degree) {
            if (rd >= d) continue;
            for (const auto& r : rels)
                for (const auto& tm : tag_monomials(tring, d - rd)) old_multiples.push_back(r.mul_term(tm, Rat(1)));
        }
        PolySpan span = echelon_span(tring, old_multiples, exec);
        for (const auto& r : kernel_polys) {
            Poly fresh = span.insert(r);
            if (!fresh.is_zero()) {
                relations.push_back(fresh);
                relations_by_degree[d].push_back(fresh);
            }
        }
    }
    return Ideal::make(tring, std::move(relations));
}

}  // namespace

ReductionPresentation reduction_presentation_big(const InvariantBasis& inv, const Ideal& moment,
                                                 int relation_degree_bound, const Budget& budget, GbCache* cache,
                                                 Exec exec) {
    GroebnerBasis gb = buchberger(moment, moment.ring->grevlex(), budget, cache);

    // minimal generators modulo the moment ideal: drop generators whose
    // normal form lies in the span of products of kept generators
    std::vector<Poly> kept;
    std::vector<int> kept_deg;
    std::vector<int> order_idx(inv.generators.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = static_cast<int>(i);
    std::stable_sort(order_idx.begin(), order_idx.end(),
                     [&](int a, int b) { return inv.generator_degrees[a] < inv.generator_degrees[b]; });
    for (int idx : order_idx) {
        const Poly& g = inv.generators[idx];
        int d = inv.generator_degrees[idx];
        std::vector<Poly> competitors;
        // NFs of products of kept generators with total degree d (>= 1 factor)
        std::function<void(std::size_t, int, Poly)> build = [&](std::size_t from, int remaining, Poly acc) {
            for (std::size_t k = from; k < kept.size(); ++k) {
                if (kept_deg[k] > remaining) continue;
                Poly next = acc * kept[k];
                if (kept_deg[k] == remaining)
                    competitors.push_back(next);
                else
                    build(k, remaining - kept_deg[k], next);
            }
        };
        build(0, d, Poly::constant(inv.ring, Rat(1)));
        std::vector<Poly> nf_competitors;
        for (const auto& c : competitors) nf_competitors.push_back(normal_form(c, gb));
        PolySpan span = echelon_span(inv.ring, nf_competitors, exec);
        if (!span.contains(normal_form(g, gb))) {
            kept.push_back(g);
            kept_deg.push_back(d);
        }
    }
    if (kept.empty()) throw std::invalid_argument("reduction_presentation_big: no generators survive modulo I");

    ReductionPresentation pres;
    pres.source_ring = inv.ring;
    pres.generators = kept;
    pres.degrees = kept_deg;
    RingPtr tring = tag_ring_for(kept_deg);

    try {
        std::vector<std::string> tags = tring->vars();
        Ideal rel = subalgebra_relations(moment, kept, tags, budget, cache);
        // subalgebra_relations builds its own tag ring; re-grade it so that
        // T_k carries weight deg(g_k)
        std::vector<Poly> regraded;
        for (const auto& r : rel.gens) regraded.push_back(lift_to_ring(r, tring));
        pres.relations = Ideal::make(tring, std::move(regraded));
        pres.route = "subalgebra-elimination";
        pres.truncation = relation_degree_bound;
    } catch (const BudgetError&) {
        pres.relations = relations_by_linear_algebra(gb, kept, tring, relation_degree_bound, exec);
        pres.partial = true;
        pres.truncation = relation_degree_bound;
        pres.route = "linear-algebra";
    }

    // relations must vanish on the generators modulo I
    for (const auto& r : pres.relations.gens)
        if (!normal_form(r.substitute(pres.generators, inv.ring), gb).is_zero())
            throw std::logic_error("reduction_presentation_big: relation fails on generators: " + r.to_string());
    return pres;
}

ReductionPresentation weyl_quotient_presentation(const CartanData& cd, int degree_bound, const Budget& budget,
                                                 GbCache* cache, Exec exec) {
    InvariantBasis inv;
    if (cd.weyl.is_cyclic()) {
        inv = cyclic_diagonal_invariant_basis(*cd.weyl.cyclic, cd.st_ring, degree_bound);
    } else {
        FiniteSpec spec;
        spec.gens = cd.weyl.matrices;
        inv = finite_invariant_basis(finite_group_elements(spec), cd.st_ring, degree_bound, exec);
    }
    ReductionPresentation pres;
    pres.source_ring = cd.st_ring;
    pres.generators = inv.generators;
    pres.degrees = inv.generator_degrees;
    if (pres.generators.empty()) throw std::logic_error("weyl_quotient_presentation: no invariants up to bound");
    RingPtr tring = tag_ring_for(pres.degrees);
    Ideal zero = Ideal::make(cd.st_ring, {});
    Ideal rel = subalgebra_relations(zero, pres.generators, tring->vars(), budget, cache);
    std::vector<Poly> regraded;
    for (const auto& r : rel.gens) regraded.push_back(lift_to_ring(r, tring));
    pres.relations = Ideal::make(tring, std::move(regraded));
    pres.route = "weyl-quotient";
    pres.truncation = degree_bound;
    for (const auto& r : pres.relations.gens)
        if (!r.substitute(pres.generators, cd.st_ring).is_zero())
            throw std::logic_error("weyl_quotient_presentation: relation fails on generators");
    return pres;
}

std::vector<SurjectivityRow> surjectivity_check(const InvariantBasis& source, const CartanData& cd,
                                                const InvariantBasis& target, int degree_bound, Exec exec) {
    std::vector<SurjectivityRow> rows;
    for (int d = 1; d <= degree_bound; ++d) {
        SurjectivityRow row;
        row.degree = d;
        if (d > source.degree_bound || d > target.degree_bound) {
            row.source_dim = row.restricted_dim = row.target_dim = -1;  // inconclusive
            rows.push_back(row);
            continue;
        }
        row.source_dim = static_cast<int>(source.by_degree[d].size());
        std::vector<Poly> restricted;
        for (const auto& f : source.by_degree[d]) {
            Poly r = cartan_restrict(f, cd);
            if (!weyl_fixes(cd, r))
                throw std::logic_error("surjectivity_check: restricted invariant is not Weyl-fixed: " +
                                       f.to_string());
            if (!r.is_zero()) restricted.push_back(std::move(r));
        }
        PolySpan rspan = echelon_span(cd.st_ring, restricted, exec);
        row.restricted_dim = rspan.dim();
        row.target_dim = static_cast<int>(target.by_degree[d].size());
        // restricted span must sit inside the target span; surjectivity is
        // then exactly dimension equality
        bool contained = true;
        PolySpan tspan = echelon_span(cd.st_ring, target.by_degree[d], exec);
        for (const auto& r : rspan.basis())
            if (!tspan.contains(r)) contained = false;
        if (!contained)
            throw std::logic_error("surjectivity_check: restriction leaves the target invariant space at degree " +
                                   std::to_string(d));
        row.surjective = (row.restricted_dim == row.target_dim);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ReducednessResult> reducedness_probe(const Ideal& moment, const std::vector<Poly>& candidates, int cap,
                                                 const Budget& budget, GbCache* cache) {
    std::vector<ReducednessResult> out;
    for (const auto& p : candidates) {
        ReducednessResult r;
        r.candidate = p;
        RadicalVerdict v = radical_member(p, moment, cap, budget, cache);
        r.in_radical = v.in_radical;
        r.exponent = v.exponent;
        r.via_rabinowitsch = v.via_rabinowitsch;
        r.in_ideal = v.exponent.has_value() && *v.exponent == 1;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Poly> auto_witness_candidates(const InvariantBasis& inv, int max_degree) {
    std::vector<Poly> out;
    const auto& gens = inv.generators;
    const auto& degs = inv.generator_degrees;
    // monomials in the generators up to the ambient degree cap
    std::function<void(std::size_t, int, Poly)> build = [&](std::size_t from, int budget_left, Poly acc) {
        for (std::size_t k = from; k < gens.size(); ++k) {
            if (degs[k] > budget_left) continue;
            Poly next = acc * gens[k];
            out.push_back(next);
            build(k, budget_left - degs[k], next);
        }
    };
    build(0, max_degree, Poly::constant(inv.ring, Rat(1)));
    // 2x2 determinant combinations with matching degrees
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t l = i; l < gens.size(); ++l) {
            if (degs[i] + degs[l] > max_degree) continue;
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (std::size_t k = j; k < gens.size(); ++k) {
                    if (degs[j] + degs[k] != degs[i] + degs[l]) continue;
                    if (std::make_pair(std::min(i, l), std::max(i, l)) <=
                        std::make_pair(std::min(j, k), std::max(j, k)))
                        continue;
                    Poly det = gens[i] * gens[l] - gens[j] * gens[k];
                    if (!det.is_zero()) out.push_back(std::move(det));
                }
        }
    // dedupe, deterministic order
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.to_string() < b.to_string(); });
    out.erase(std::unique(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a == b; }), out.end());
    return out;
}

DimensionResult dimension_check(const Ideal& moment, int expected, const Budget& budget, GbCache* cache) {
    DimensionResult r;
    r.expected = expected;
    r.computed = krull_dimension(moment, budget, cache);
    r.match = (r.computed == r.expected);
    return r;
}

std::vector<int> minimal_generator_degrees(const Ideal& ideal, int degree_bound, Exec exec) {
    std::vector<int> degrees;
    std::map<int, std::vector<Poly>> by_degree;  // echelonized ideal slices found so far, by generator
    std::vector<std::pair<Poly, int>> mingens;
    for (int d = 1; d <= degree_bound; ++d) {
        // span of degree-d elements generated by lower minimal generators
        std::vector<Poly> lower;
        for (const auto& [gd, gs] : by_degree) {
            if (gd >= d) continue;
            for (const auto& g : gs)
                for (const auto& tm : tag_monomials(ideal.ring, d - gd)) lower.push_back(g.mul_term(tm, Rat(1)));
        }
        PolySpan span = echelon_span(ideal.ring, lower, exec);
        // full degree-d slice of the ideal from its given generators
        std::vector<Poly> slice;
        for (const auto& g : ideal.gens) {
            long gd = g.weighted_degree();
            if (!g.is_homogeneous())
                throw std::invalid_argument("minimal_generator_degrees: non-homogeneous ideal");
            if (gd > d) continue;
            if (gd == d)
                slice.push_back(g);
            else
                for (const auto& tm : tag_monomials(ideal.ring, d - static_cast<int>(gd)))
                    slice.push_back(g.mul_term(tm, Rat(1)));
        }
        for (const auto& s : slice) {
            Poly fresh = span.insert(s);
            if (!fresh.is_zero()) {
                degrees.push_back(d);
                by_degree[d].push_back(fresh);
            }
        }
    }
    return degrees;
}

std::vector<Int> presentation_quotient_dims(const ReductionPresentation& p, int truncation, const Budget& budget,
                                            GbCache* cache) {
    if (p.relations.gens.empty()) {
        HilbertSeriesRat free;
        free.numerator = {Int(1)};
        free.denom_weights = p.relations.ring ? p.relations.ring->weights() : std::vector<int>{};
        if (free.denom_weights.empty()) {
            // presentation with no relations recorded and no ring: treat as free
            for (int d : p.degrees) free.denom_weights.push_back(d);
        }
        return free.expand(truncation);
    }
    return hilbert_series(p.relations, budget, cache).expand(truncation);
}

PresentationMatch compare_presentations(const ReductionPresentation& a, const ReductionPresentation& b,
                                        int truncation, const Budget& budget, GbCache* cache, Exec exec) {
    PresentationMatch m;
    m.truncation = truncation;
    m.gen_degrees_a = a.degrees;
    m.gen_degrees_b = b.degrees;
    std::sort(m.gen_degrees_a.begin(), m.gen_degrees_a.end());
    std::sort(m.gen_degrees_b.begin(), m.gen_degrees_b.end());
    m.generator_degrees_match = (m.gen_degrees_a == m.gen_degrees_b);

    m.rel_degrees_a = minimal_generator_degrees(a.relations, truncation, exec);
    m.rel_degrees_b = minimal_generator_degrees(b.relations, truncation, exec);
    m.relation_degrees_match = (m.rel_degrees_a == m.rel_degrees_b);

    m.series_a = presentation_quotient_dims(a, truncation, budget, cache);
    m.series_b = presentation_quotient_dims(b, truncation, budget, cache);
    m.hilbert_series_match = (m.series_a == m.series_b);
    return m;
}

}  // namespace symchev
