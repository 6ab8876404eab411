#include "symchev/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace symchev {

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Int> poly_add_shifted(std::vector<Int> a, const std::vector<Int>& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

std::vector<Int> one_minus_t_pow(int d) {
    std::vector<Int> p(d + 1);
    p[0] = 1;
    p[d] = -1;
    return p;
}

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    });
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool dominated = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(std::move(m));
    }
    gens = std::move(out);
}

std::vector<Int> numerator_rec(std::vector<Monomial> gens, const std::vector<int>& w) {
    minimalize(gens);
    if (gens.empty()) return {Int(1)};
    if (gens.size() == 1) return one_minus_t_pow(static_cast<int>(gens[0].weighted_degree(w)));

    // pairwise coprime: the quotient is a tensor product
    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a)
        for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
            if (!gens[a].coprime(gens[b])) coprime = false;
    if (coprime) {
        std::vector<Int> num{Int(1)};
        for (const auto& m : gens) num = poly_mul(num, one_minus_t_pow(static_cast<int>(m.weighted_degree(w))));
        return num;
    }

    // pivot on the most used variable
    const int n = gens[0].nvars();
    std::vector<int> occ(n, 0);
    for (const auto& m : gens)
        for (int v = 0; v < n; ++v)
            if (m.e[v]) ++occ[v];
    int pivot = static_cast<int>(std::max_element(occ.begin(), occ.end()) - occ.begin());

    // N(I) = N(I + (x_v)) + t^{w_v} N(I : x_v)
    std::vector<Monomial> sum_side;
    Monomial pv(n);
    pv.e[pivot] = 1;
    sum_side.push_back(pv);
    for (const auto& m : gens)
        if (m.e[pivot] == 0) sum_side.push_back(m);

    std::vector<Monomial> colon_side;
    for (const auto& m : gens) {
        Monomial q = m;
        if (q.e[pivot]) q.e[pivot] -= 1;
        colon_side.push_back(std::move(q));
    }

    std::vector<Int> num = numerator_rec(std::move(sum_side), w);
    std::vector<Int> colon = numerator_rec(std::move(colon_side), w);
    return poly_add_shifted(std::move(num), colon, w[pivot]);
}

}  // namespace

std::vector<Int> hilbert_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
    return numerator_rec(std::move(gens), weights);
}

std::vector<Int> HilbertSeriesRat::expand(int cap) const {
    std::vector<Int> c(cap + 1);
    for (std::size_t k = 0; k < numerator.size() && k <= static_cast<std::size_t>(cap); ++k) c[k] = numerator[k];
    for (int d : denom_weights)
        for (int k = d; k <= cap; ++k) c[k] += c[k - d];
    for (const Int& v : c)
        if (v < 0) throw std::logic_error("HilbertSeriesRat::expand: negative coefficient");
    return c;
}

int HilbertSeriesRat::pole_order_at_one() const {
    // multiplicity of t=1 in the numerator
    std::vector<Int> p = numerator;
    int mult = 0;
    while (true) {
        Int v = 0;
        for (const Int& c : p) v += c;
        if (v != 0) break;
        // divide by (1 - t): q_k = -(c_0 + ... + c_k) shifted; use synthetic division
        std::vector<Int> q(p.size() > 1 ? p.size() - 1 : 1);
        Int acc = 0;
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
            acc += p[k];
            q[k] = acc;
        }
        p = std::move(q);
        ++mult;
        if (p.size() == 1 && p[0] == 0) break;
    }
    return static_cast<int>(denom_weights.size()) - mult;
}

std::string HilbertSeriesRat::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        if (numerator[k] == 0) continue;
        Int c = numerator[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Int a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    os << ") / (";
    for (std::size_t i = 0; i < denom_weights.size(); ++i) {
        if (i) os << "*";
        os << "(1-t";
        if (denom_weights[i] != 1) os << "^" << denom_weights[i];
        os << ")";
    }
    os << ")";
    return os.str();
}

HilbertSeriesRat hilbert_series(const Ideal& i, const MonomialOrder& order, const Budget& budget, GbCache* cache) {
    for (const auto& g : i.gens)
        if (!g.is_homogeneous())
            throw std::invalid_argument("hilbert_series: non-homogeneous generator " + g.to_string());
    GroebnerBasis gb = buchberger(i, order, budget, cache);
    std::vector<Monomial> lts;
    for (const auto& g : gb.basis) lts.push_back(g.leading_term(order).m);
    HilbertSeriesRat hs;
    hs.numerator = hilbert_numerator(std::move(lts), i.ring->weights());
    hs.denom_weights = i.ring->weights();
    return hs;
}

HilbertSeriesRat hilbert_series(const Ideal& i, const Budget& budget, GbCache* cache) {
    return hilbert_series(i, i.ring->grevlex(), budget, cache);
}

namespace {

// max |S| over variable subsets S touching no generator support entirely
// (branch and bound on the complement: a minimal hitting set).
struct DimSearch {
    int n;
    std::vector<std::vector<int>> supports;
    std::vector<bool> removed;
    int best_removed;  // smallest hitting set found so far

    void run(int removed_count, std::size_t from) {
        if (removed_count >= best_removed) return;
        std::size_t uncovered = supports.size();
        for (std::size_t s = from; s < supports.size(); ++s) {
            bool hit = false;
            for (int v : supports[s])
                if (removed[v]) {
                    hit = true;
                    break;
                }
            if (!hit) {
                uncovered = s;
                break;
            }
        }
        if (uncovered == supports.size()) {
            best_removed = removed_count;
            return;
        }
        for (int v : supports[uncovered]) {
            if (removed[v]) continue;
            removed[v] = true;
            run(removed_count + 1, uncovered + 1);
            removed[v] = false;
        }
    }
};

}  // namespace

int krull_dimension(const Ideal& i, const Budget& budget, GbCache* cache) {
    GroebnerBasis gb = buchberger(i, i.ring->grevlex(), budget, cache);
    if (gb.contains_one()) throw std::domain_error("krull_dimension: unit ideal");
    std::vector<Monomial> lts = gb.leading_monomials();
    minimalize(lts);
    DimSearch ds;
    ds.n = i.ring->nvars();
    for (const auto& m : lts) {
        std::vector<int> sup;
        for (int v = 0; v < ds.n; ++v)
            if (m.e[v]) sup.push_back(v);
        ds.supports.push_back(std::move(sup));
    }
    ds.removed.assign(ds.n, false);
    ds.best_removed = ds.n;
    if (ds.supports.empty()) return ds.n;
    ds.run(0, 0);
    return ds.n - ds.best_removed;
}

}  // namespace symchev
