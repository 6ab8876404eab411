#include "symchev/polyspan.hpp"

#include <algorithm>
#include <functional>

namespace symchev {

Poly PolySpan::reduce(Poly p) const {
    MonomialOrder ord = ring_->grevlex();
    for (const auto& row : rows_) {
        if (p.is_zero()) break;
        const Monomial& pivot = row.leading_term_canonical().m;
        // single scan: subtract the matching coefficient if present
        for (const auto& t : p.terms()) {
            int c = ord.compare(t.m, pivot);
            if (c < 0) break;
            if (c == 0) {
                p.axpy(-t.c, Monomial(ring_->nvars()), row);
                break;
            }
        }
    }
    return p;
}

Poly PolySpan::insert(Poly p) {
    Poly r = reduce(std::move(p));
    if (r.is_zero()) return r;
    r = r.monic();
    MonomialOrder ord = ring_->grevlex();
    const Monomial pivot = r.leading_term_canonical().m;
    auto before = [&](const Poly& a, const Poly& b) {
        return ord.compare(a.leading_term_canonical().m, b.leading_term_canonical().m) > 0;
    };
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), r, before);
    // keep the form fully reduced: clear the new pivot from earlier rows
    // (their leading monomials are larger, so row order is unaffected)
    for (auto it = rows_.begin(); it != pos; ++it)
        for (const auto& t : it->terms())
            if (t.m == pivot) {
                it->axpy(-t.c, Monomial(ring_->nvars()), r);
                break;
            }
    rows_.insert(pos, r);
    return r;
}

PolySpan echelon_span(RingPtr ring, const std::vector<Poly>& polys, Exec exec) {
    // gather the monomial support, descending canonical order
    MonomialOrder ord = ring->grevlex();
    std::vector<Monomial> cols;
    for (const auto& p : polys)
        for (const auto& t : p.terms()) cols.push_back(t.m);
    std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    auto col_of = [&](const Monomial& m) {
        auto it = std::lower_bound(cols.begin(), cols.end(), m,
                                   [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
        return static_cast<int>(it - cols.begin());
    };

    QMatrix mat(static_cast<int>(polys.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < mat.rows(); ++i)
        for (const auto& t : polys[static_cast<std::size_t>(i)].terms()) mat.at(i, col_of(t.m)) = t.c;
    rref(mat, exec);

    PolySpan span(ring);
    for (int i = 0; i < mat.rows(); ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < mat.cols(); ++j)
            if (!is_zero(mat.at(i, j))) terms.push_back({cols[static_cast<std::size_t>(j)], mat.at(i, j)});
        if (terms.empty()) break;  // rref sorts zero rows to the bottom
        span.insert(Poly::from_terms(ring, std::move(terms)));
    }
    return span;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
    const int n = ring->nvars();
    std::vector<Monomial> out;
    Monomial cur(n);
    // enumerate exponent vectors summing to `degree`
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n - 1) {
            cur.e[var] = static_cast<std::uint16_t>(remaining);
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.e[var] = static_cast<std::uint16_t>(e);
            rec(var + 1, remaining - e);
        }
        cur.e[var] = 0;
    };
    if (n == 0) return out;
    rec(0, degree);
    MonomialOrder ord = ring->grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    return out;
}

}  // namespace symchev
