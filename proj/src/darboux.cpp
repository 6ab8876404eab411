#include "symchev/darboux.hpp"

#include <sstream>

namespace symchev {

namespace {

Poly graded_part(const Poly& p, int degree) {
    std::vector<Term> terms;
    for (const auto& t : p.terms())
        if (t.m.total_degree() == degree) terms.push_back(t);
    return Poly::from_terms(p.ring(), std::move(terms));
}

Poly truncate_deg(const Poly& p, int cap) {
    std::vector<Term> terms;
    for (const auto& t : p.terms())
        if (t.m.total_degree() <= cap) terms.push_back(t);
    return Poly::from_terms(p.ring(), std::move(terms));
}

}  // namespace

Poly TwoForm::coeff(int a, int b) const {
    if (a == b) return Poly(ring);
    bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = comp.find({a, b});
    if (it == comp.end()) return Poly(ring);
    return flip ? -it->second : it->second;
}

TwoForm TwoForm::graded_piece(int r) const {
    TwoForm out;
    out.ring = ring;
    for (const auto& [key, p] : comp) {
        Poly g = graded_part(p, r);
        if (!g.is_zero()) out.comp.emplace(key, std::move(g));
    }
    return out;
}

bool TwoForm::is_zero() const {
    for (const auto& [key, p] : comp)
        if (!p.is_zero()) return false;
    return true;
}

bool ThreeForm::is_zero() const {
    for (const auto& [key, p] : comp)
        if (!p.is_zero()) return false;
    return true;
}

TwoForm exterior_d(const OneForm& f) {
    TwoForm out;
    out.ring = f.ring;
    const int n = f.ring->nvars();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Poly c = f.comp[b].derivative(a) - f.comp[a].derivative(b);
            if (!c.is_zero()) out.comp.emplace(std::make_pair(a, b), std::move(c));
        }
    return out;
}

ThreeForm exterior_d(const TwoForm& f) {
    ThreeForm out;
    out.ring = f.ring;
    const int n = f.ring->nvars();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = a + 1; c < n; ++c) {
                if (c <= b) continue;
                Poly v = f.coeff(b, c).derivative(a) - f.coeff(a, c).derivative(b) + f.coeff(a, b).derivative(c);
                if (!v.is_zero()) out.comp.emplace(std::make_tuple(a, b, c), std::move(v));
            }
    return out;
}

OneForm poincare_potential(const TwoForm& part) {
    const RingPtr& ring = part.ring;
    const int n = ring->nvars();
    int r = -1;
    for (const auto& [key, p] : part.comp) {
        if (p.is_zero()) continue;
        long w;
        if (!p.is_homogeneous(&w)) throw std::invalid_argument("poincare_potential: coefficients not homogeneous");
        if (r >= 0 && w != r) throw std::invalid_argument("poincare_potential: mixed coefficient degrees");
        r = static_cast<int>(w);
    }
    if (r < 0) {
        OneForm zero;
        zero.ring = ring;
        zero.comp.assign(n, Poly(ring));
        return zero;
    }
    if (r == 0)
        throw std::invalid_argument("poincare_potential: constant parts belong in the skew matrix, not the homotopy");
    if (!exterior_d(part).is_zero()) throw std::invalid_argument("poincare_potential: input 2-form is not closed");
    OneForm psi;
    psi.ring = ring;
    psi.comp.assign(n, Poly(ring));
    Rat scale = rat(1, r + 2);
    for (const auto& [key, f] : part.comp) {
        auto [a, b] = key;
        Poly za = Poly::variable(ring, a);
        Poly zb = Poly::variable(ring, b);
        psi.comp[b] = psi.comp[b] + (f * za).scaled(scale);
        psi.comp[a] = psi.comp[a] - (f * zb).scaled(scale);
    }
    return psi;
}

FormalTwoForm FormalTwoForm::make(RingPtr ring, QMatrix constant_skew, TwoForm higher, int degree_cap) {
    FormalTwoForm f;
    f.n = ring->nvars();
    f.ring = std::move(ring);
    if (constant_skew.rows() != f.n || constant_skew.cols() != f.n)
        throw std::invalid_argument("FormalTwoForm: constant matrix size != nvars");
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            if (constant_skew.at(a, b) != -constant_skew.at(b, a))
                throw std::invalid_argument("FormalTwoForm: constant part is not skew");
    if (is_zero(determinant(constant_skew)))
        throw std::invalid_argument("FormalTwoForm: constant part is singular");
    f.constant = std::move(constant_skew);
    f.degree_cap = degree_cap;
    f.higher = std::move(higher);
    f.higher.ring = f.ring;
    for (const auto& [key, p] : f.higher.comp) {
        if (p.is_zero()) continue;
        if (p.total_degree() > degree_cap || graded_part(p, 0).is_zero() == false)
            throw std::invalid_argument("FormalTwoForm: higher part must have coefficient degrees 1..cap");
    }
    // closedness, piece by piece (exact through the stored truncation)
    for (int r = 1; r <= degree_cap; ++r)
        if (!exterior_d(f.higher.graded_piece(r)).is_zero())
            throw std::invalid_argument("FormalTwoForm: d(omega) != 0 at coefficient degree " + std::to_string(r));
    return f;
}

TwoForm constant_pullback(const RingPtr& ring, const QMatrix& constant_skew, const std::vector<Poly>& xi,
                          int truncate_degree) {
    const int n = ring->nvars();
    // jacobian
    std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n, Poly(ring)));
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p) jac[a][p] = xi[a].derivative(p);
    TwoForm out;
    out.ring = ring;
    // pair coefficient (p<q) of sum_{a,b} (C/2)_{ab} dxi_a ^ dxi_b equals
    // (J^T C J)_{pq}; compute M = C J first
    std::vector<std::vector<Poly>> cj(n, std::vector<Poly>(n, Poly(ring)));
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p) {
            Poly acc(ring);
            for (int s = 0; s < n; ++s)
                if (!is_zero(constant_skew.at(a, s))) acc = acc + jac[s][p].scaled(constant_skew.at(a, s));
            cj[a][p] = std::move(acc);
        }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            Poly acc(ring);
            for (int a = 0; a < n; ++a)
                if (!jac[a][p].is_zero()) acc = acc + jac[a][p] * cj[a][q];
            acc = truncate_deg(acc, truncate_degree);
            if (!acc.is_zero()) out.comp.emplace(std::make_pair(p, q), std::move(acc));
        }
    return out;
}

CoordinateChange darboux_normalize(const FormalTwoForm& omega, int degree_cap) {
    const RingPtr& ring = omega.ring;
    const int n = omega.n;
    const int cap = degree_cap > 0 ? degree_cap : omega.degree_cap;
    QMatrix cinv = inverse(omega.constant);

    CoordinateChange cc;
    cc.guaranteed_degree = cap - 2;
    for (int i = 0; i < n; ++i) cc.xi.push_back(Poly::variable(ring, i));

    // solve degree r = 1 .. cap-2: the degree-r residual of the pullback
    // determines xi^{(r+1)} through the Euler potential
    for (int r = 1; r <= cap - 2; ++r) {
        TwoForm pulled = constant_pullback(ring, omega.constant, cc.xi, r);
        TwoForm residual;
        residual.ring = ring;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Poly want = graded_part(omega.higher.coeff(p, q), r);
                Poly have = graded_part(pulled.coeff(p, q), r);
                Poly res = want - have;
                if (!res.is_zero()) residual.comp.emplace(std::make_pair(p, q), std::move(res));
            }
        if (residual.comp.empty()) continue;
        OneForm psi = poincare_potential(residual);  // also asserts closedness
        // -C xi^{(r+1)} = psi  =>  xi^{(r+1)} = -C^{-1} psi
        for (int i = 0; i < n; ++i) {
            Poly add(ring);
            for (int q = 0; q < n; ++q)
                if (!is_zero(cinv.at(i, q))) add = add + psi.comp[q].scaled(-cinv.at(i, q));
            cc.xi[i] = cc.xi[i] + add;
        }
    }

    // self-certification: exact pullback substitution through the guaranteed
    // coefficient degree
    TwoForm check = constant_pullback(ring, omega.constant, cc.xi, cc.guaranteed_degree);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            Poly want_total = Poly::constant(ring, omega.constant.at(p, q)) +
                              truncate_deg(omega.higher.coeff(p, q), cc.guaranteed_degree);
            Poly have = check.coeff(p, q);
            if (!(want_total == have)) {
                std::ostringstream os;
                os << "darboux_normalize: pullback mismatch at dz" << p + 1 << "^dz" << q + 1
                   << ": expected " << want_total.to_string() << ", got " << have.to_string();
                throw std::logic_error(os.str());
            }
        }
    return cc;
}

}  // namespace symchev
