#include "symchev/poisson.hpp"

#include "symchev/polyspan.hpp"

namespace symchev {

Poly poisson_bracket(const Poly& f, const Poly& g) {
    require_same_ring(f, g, "poisson_bracket");
    const int two_n = f.ring()->nvars();
    if (two_n % 2) throw std::invalid_argument("poisson_bracket: ring is not a symplectic double");
    const int n = two_n / 2;
    Poly acc(f.ring());
    for (int i = 0; i < n; ++i) {
        acc = acc + f.derivative(i) * g.derivative(n + i);
        acc = acc - f.derivative(n + i) * g.derivative(i);
    }
    return acc;
}

std::vector<CentralityCheck> check_invariant_central(const std::vector<Poly>& moment_gens,
                                                     const std::vector<Poly>& invariants) {
    std::vector<CentralityCheck> out;
    for (std::size_t fi = 0; fi < invariants.size(); ++fi)
        for (std::size_t mi = 0; mi < moment_gens.size(); ++mi) {
            CentralityCheck c;
            c.invariant_index = static_cast<int>(fi);
            c.moment_index = static_cast<int>(mi);
            c.zero = poisson_bracket(invariants[fi], moment_gens[mi]).is_zero();
            out.push_back(c);
        }
    return out;
}

namespace {

// Basis of span(a) ∩ span(b) via the kernel of the stacked coefficient
// matrix [A | -B].
std::vector<Poly> span_intersection(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b,
                                    Exec exec) {
    if (a.empty() || b.empty()) return {};
    MonomialOrder ord = ring->grevlex();
    std::vector<Monomial> cols;
    for (const auto& p : a)
        for (const auto& t : p.terms()) cols.push_back(t.m);
    for (const auto& p : b)
        for (const auto& t : p.terms()) cols.push_back(t.m);
    std::sort(cols.begin(), cols.end(), [&](const Monomial& x, const Monomial& y) { return ord.compare(x, y) > 0; });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    auto col_of = [&](const Monomial& m) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m,
                                   [&](const Monomial& x, const Monomial& y) { return ord.compare(x, y) > 0; });
        return static_cast<int>(it - cols.begin());
    };
    QMatrix sys(static_cast<int>(cols.size()), static_cast<int>(a.size() + b.size()));
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
        for (const auto& t : a[static_cast<std::size_t>(j)].terms()) sys.at(col_of(t.m), j) = t.c;
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
        for (const auto& t : b[static_cast<std::size_t>(j)].terms())
            sys.at(col_of(t.m), static_cast<int>(a.size()) + j) = -t.c;
    std::vector<Poly> raw;
    for (const auto& v : rat_kernel(sys, exec)) {
        Poly p(ring);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!is_zero(v[j])) p = p + a[j].scaled(v[j]);
        if (!p.is_zero()) raw.push_back(std::move(p));
    }
    return echelon_span(ring, raw, exec).basis();
}

}  // namespace

PoissonIdealReport check_poisson_ideal(const InvariantBasis& inv, const Ideal& moment, const GroebnerBasis& gb,
                                       int degree_bound, Exec exec) {
    PoissonIdealReport rep;
    for (int d = 1; d <= degree_bound && d <= inv.degree_bound; ++d) {
        if (inv.by_degree[d].empty()) continue;
        // degree-d slice of I: monomial multiples of the moment generators
        std::vector<Poly> ideal_slice;
        for (const auto& mu : moment.gens) {
            int md = mu.total_degree();
            if (md > d) continue;
            if (md == d) {
                ideal_slice.push_back(mu);
                continue;
            }
            for (const auto& m : monomials_of_degree(moment.ring, d - md))
                ideal_slice.push_back(mu.mul_term(m, Rat(1)));
        }
        std::vector<Poly> ig = span_intersection(inv.ring, inv.by_degree[d], ideal_slice, exec);
        PoissonIdealDegree row;
        row.degree = d;
        row.ig_dim = static_cast<int>(ig.size());
        for (const auto& h : ig)
            for (const auto& f : inv.generators)
                if (!normal_form(poisson_bracket(h, f), gb).is_zero()) {
                    row.all_brackets_reduce_to_zero = false;
                    rep.holds = false;
                }
        rep.rows.push_back(row);
    }
    return rep;
}

bool bracket_compatibility(const Poly& f, const Poly& g, const CartanData& cd) {
    Poly lhs = cartan_restrict(poisson_bracket(f, g), cd);
    Poly rhs = poisson_bracket(cartan_restrict(f, cd), cartan_restrict(g, cd));
    return lhs == rhs;
}

EquivarianceReport moment_equivariance(const SymplecticDouble& d) {
    EquivarianceReport rep;
    const auto* lie = std::get_if<LieSpec>(&d.base.group);
    if (const auto* torus = std::get_if<TorusSpec>(&d.base.group)) {
        // abelian: all pairwise brackets must vanish identically
        std::vector<Poly> mu = moment_generators(d);
        (void)torus;
        for (std::size_t i = 0; i < mu.size(); ++i)
            for (std::size_t j = i; j < mu.size(); ++j)
                if (!poisson_bracket(mu[i], mu[j]).is_zero()) rep.holds = false;
        rep.note = "abelian case: pairwise brackets vanish";
        return rep;
    }
    if (!lie) {
        rep.applicable = false;
        rep.note = "finite group: moment map vanishes identically";
        return rep;
    }
    std::vector<Poly> mu = moment_generators(d);
    for (std::size_t i = 0; i < lie->gens.size(); ++i)
        for (std::size_t j = 0; j < lie->gens.size(); ++j) {
            QMatrix c = commutator(lie->gens[i], lie->gens[j]);
            auto coords = in_span(lie->gens, c);
            if (!coords) {
                rep.applicable = false;
                rep.holds = true;
                rep.note = "generator span not closed under commutators; structure constants unavailable";
                return rep;
            }
            Poly expected(d.ring);
            for (std::size_t k = 0; k < mu.size(); ++k)
                if (!is_zero((*coords)[k])) expected = expected + mu[k].scaled((*coords)[k]);
            if (!(poisson_bracket(mu[i], mu[j]) == expected)) rep.holds = false;
        }
    rep.note = "structure constants recovered from generator matrices";
    return rep;
}

}  // namespace symchev
