#include "symchev/grouprep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace symchev {

Representation Representation::make(GroupSpec g, std::vector<std::string> var_names) {
    Representation r;
    r.dim = static_cast<int>(var_names.size());
    r.var_names = std::move(var_names);
    if (auto* t = std::get_if<TorusSpec>(&g)) {
        if (t->weights.cols() != r.dim) throw std::invalid_argument("Representation: torus weight columns != dim V");
    } else if (auto* l = std::get_if<LieSpec>(&g)) {
        for (const auto& m : l->gens)
            if (m.rows() != r.dim || m.cols() != r.dim)
                throw std::invalid_argument("Representation: Lie generator not dim x dim");
    } else if (auto* f = std::get_if<FiniteSpec>(&g)) {
        for (const auto& m : f->gens) {
            if (m.rows() != r.dim || m.cols() != r.dim)
                throw std::invalid_argument("Representation: finite generator not dim x dim");
            if (is_zero(determinant(m))) throw std::invalid_argument("Representation: finite generator not invertible");
        }
    }
    r.group = std::move(g);
    return r;
}

SymplecticDouble symplectic_double(Representation rep) {
    SymplecticDouble d;
    d.ring = make_double_ring(rep.var_names);
    d.base = std::move(rep);
    return d;
}

ZMatrix SymplecticDouble::double_weights() const {
    const auto* t = std::get_if<TorusSpec>(&base.group);
    if (!t) throw std::logic_error("double_weights: not a torus representation");
    ZMatrix w(t->weights.rows(), 2 * n());
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < n(); ++j) {
            w.at(i, j) = t->weights.at(i, j);
            w.at(i, n() + j) = -t->weights.at(i, j);
        }
    return w;
}

namespace {

QMatrix block_double(const QMatrix& a, const QMatrix& dual) {
    const int n = a.rows();
    QMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(n + i, n + j) = dual.at(i, j);
        }
    return m;
}

}  // namespace

std::vector<QMatrix> SymplecticDouble::lie_double_matrices() const {
    const auto* l = std::get_if<LieSpec>(&base.group);
    if (!l) throw std::logic_error("lie_double_matrices: not a Lie representation");
    std::vector<QMatrix> out;
    for (const auto& a : l->gens) out.push_back(block_double(a, a.transpose().scaled(Rat(-1))));
    return out;
}

std::vector<QMatrix> SymplecticDouble::finite_double_matrices() const {
    const auto* f = std::get_if<FiniteSpec>(&base.group);
    if (!f) throw std::logic_error("finite_double_matrices: not a finite-group representation");
    std::vector<QMatrix> out;
    for (const auto& g : f->gens) out.push_back(block_double(g, inverse(g).transpose()));
    return out;
}

std::vector<Poly> moment_generators(const SymplecticDouble& d) {
    const int n = d.n();
    std::vector<Poly> out;
    if (const auto* t = std::get_if<TorusSpec>(&d.base.group)) {
        for (int k = 0; k < t->weights.rows(); ++k) {
            std::vector<Term> terms;
            for (int j = 0; j < n; ++j) {
                if (t->weights.at(k, j) == 0) continue;
                Term tm;
                tm.c = Rat(t->weights.at(k, j));
                tm.m = Monomial(2 * n);
                tm.m.e[j] = 1;
                tm.m.e[n + j] = 1;
                terms.push_back(std::move(tm));
            }
            out.push_back(Poly::from_terms(d.ring, std::move(terms)));
        }
    } else if (const auto* l = std::get_if<LieSpec>(&d.base.group)) {
        for (const auto& a : l->gens) {
            // mu^A = sum_i y_i (A x)_i
            std::vector<Term> terms;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (is_zero(a.at(i, j))) continue;
                    Term tm;
                    tm.c = a.at(i, j);
                    tm.m = Monomial(2 * n);
                    tm.m.e[n + i] += 1;
                    tm.m.e[j] += 1;
                    terms.push_back(std::move(tm));
                }
            out.push_back(Poly::from_terms(d.ring, std::move(terms)));
        }
    }
    // finite groups: moment map vanishes identically
    return out;
}

ThetaGrading theta_grading(int n, int m, std::vector<int> exponents) {
    if (m < 2) throw std::invalid_argument("theta_grading: order must be >= 2");
    if (static_cast<int>(exponents.size()) != n) throw std::invalid_argument("theta_grading: exponent count != n");
    ThetaGrading g;
    g.n = n;
    g.m = m;
    for (int e : exponents) g.exponents.push_back(((e % m) + m) % m);
    g.piece_basis.assign(m, {});
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            int res = ((g.exponents[j] - g.exponents[k]) % m + m) % m;
            g.piece_basis[res].push_back({j, k});
        }
    return g;
}

ThetaRepresentation theta_representation(int n, int m, std::vector<int> exponents) {
    ThetaRepresentation tr;
    tr.grading = theta_grading(n, m, std::move(exponents));
    tr.g0_basis = tr.grading.piece_basis[0];
    tr.g1_basis = tr.grading.piece_basis[1 % m];

    const int dim1 = static_cast<int>(tr.g1_basis.size());
    std::map<std::pair<int, int>, int> g1_index;
    for (int i = 0; i < dim1; ++i) g1_index[tr.g1_basis[i]] = i;

    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    LieSpec lie;
    for (const auto& [a, b] : tr.g0_basis) {
        QMatrix act(dim1, dim1);
        for (int col = 0; col < dim1; ++col) {
            const auto& [c, d] = tr.g1_basis[col];
            if (b == c) {
                auto it = g1_index.find({a, d});
                if (it == g1_index.end()) throw std::logic_error("theta_representation: bracket left the grading");
                act.at(it->second, col) += 1;
            }
            if (d == a) {
                auto it = g1_index.find({c, b});
                if (it == g1_index.end()) throw std::logic_error("theta_representation: bracket left the grading");
                act.at(it->second, col) -= 1;
            }
        }
        std::ostringstream nm;
        nm << "E" << a + 1 << b + 1;
        lie.names.push_back(nm.str());
        lie.gens.push_back(std::move(act));
    }

    std::vector<std::string> vars;
    for (const auto& [j, k] : tr.g1_basis) {
        std::ostringstream v;
        v << "x" << j + 1 << k + 1;
        vars.push_back(v.str());
    }
    tr.rep = Representation::make(GroupSpec(std::move(lie)), std::move(vars));
    return tr;
}

std::vector<QMatrix> finite_group_elements(const FiniteSpec& g) {
    const int n = g.gens.empty() ? 0 : g.gens[0].rows();
    std::vector<QMatrix> elements{QMatrix::identity(n)};
    std::set<std::string> seen{elements[0].to_string()};
    std::size_t frontier = 0;
    while (frontier < elements.size()) {
        QMatrix base = elements[frontier++];
        for (const auto& gen : g.gens) {
            QMatrix prod = base * gen;
            if (seen.insert(prod.to_string()).second) {
                elements.push_back(std::move(prod));
                if (static_cast<int>(elements.size()) > g.order_cap)
                    throw std::runtime_error("finite_group_elements: order cap " + std::to_string(g.order_cap) +
                                             " exceeded");
            }
        }
    }
    return elements;
}

std::vector<std::vector<Rat>> dual_cartan(const SymplecticDouble& d, const std::vector<std::vector<Rat>>& c_basis,
                                          bool assert_stable) {
    if (!assert_stable)
        throw std::invalid_argument("dual_cartan: caller must assert stability (U = 0 is assumed, not verified)");
    const int n = d.n();
    std::vector<std::vector<Rat>> span_rows;
    auto act = [&](const QMatrix& a) {
        for (const auto& v : c_basis) span_rows.push_back(a.apply(v));
    };
    if (const auto* t = std::get_if<TorusSpec>(&d.base.group)) {
        for (int k = 0; k < t->weights.rows(); ++k) {
            QMatrix a(n, n);
            for (int j = 0; j < n; ++j) a.at(j, j) = Rat(t->weights.at(k, j));
            act(a);
        }
    } else if (const auto* l = std::get_if<LieSpec>(&d.base.group)) {
        for (const auto& a : l->gens) act(a);
    } else {
        throw std::invalid_argument("dual_cartan: finite groups have g = 0; supply cdual explicitly");
    }
    QMatrix m = qmatrix_from_rows(span_rows);
    int gc_dim = rank(m);
    std::vector<std::vector<Rat>> ann = rat_kernel(m);
    if (static_cast<int>(ann.size()) != static_cast<int>(c_basis.size()) || gc_dim + static_cast<int>(ann.size()) != n)
        throw std::runtime_error(
            "dual_cartan: annihilator dimension " + std::to_string(ann.size()) + " != dim c = " +
            std::to_string(c_basis.size()) + " (input not stable/polar as declared?)");
    return ann;
}

bool preserves_standard_symplectic_form(const QMatrix& w) {
    const int two_k = w.rows();
    if (two_k % 2 || w.cols() != two_k) return false;
    const int k = two_k / 2;
    QMatrix j(two_k, two_k);
    for (int a = 0; a < k; ++a) {
        j.at(a, k + a) = 1;
        j.at(k + a, a) = -1;
    }
    return (w.transpose() * j * w) == j;
}

CartanData make_cartan_data(std::vector<std::vector<Rat>> c_basis, std::vector<std::vector<Rat>> cdual_basis,
                            WeylAction weyl, std::string label) {
    const int k = static_cast<int>(c_basis.size());
    if (static_cast<int>(cdual_basis.size()) != k)
        throw std::invalid_argument("make_cartan_data: dim c != dim c_dual");
    // pairing P_ab = <c_a, cdual_b>
    QMatrix p(k, k);
    for (int a = 0; a < k; ++a) {
        if (c_basis[a].size() != cdual_basis[a].size())
            throw std::invalid_argument("make_cartan_data: c and cdual live in different dimensions");
        for (int b = 0; b < k; ++b) {
            Rat s = 0;
            for (std::size_t i = 0; i < c_basis[a].size(); ++i) s += c_basis[a][i] * cdual_basis[b][i];
            p.at(a, b) = s;
        }
    }
    QMatrix pinv;
    try {
        pinv = inverse(p);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("make_cartan_data: degenerate c x cdual pairing");
    }

    // renormalize: cdual'_b = sum_a (P^{-T})_{b a} cdual_a gives <c_a, cdual'_b> = delta_ab
    QMatrix pinv_t = pinv.transpose();
    std::vector<std::vector<Rat>> dual_norm(k, std::vector<Rat>(cdual_basis[0].size()));
    for (int b = 0; b < k; ++b)
        for (std::size_t i = 0; i < cdual_basis[0].size(); ++i) {
            Rat s = 0;
            for (int a = 0; a < k; ++a) s += pinv_t.at(b, a) * cdual_basis[a][i];
            dual_norm[b][i] = s;
        }

    // t-coordinates transform by P: conjugate explicit Weyl matrices into the
    // normalized frame. Cyclic diagonal actions stay diagonal only when the
    // pairing was already diagonal.
    WeylAction wa = std::move(weyl);
    if (wa.is_cyclic()) {
        if (!p.is_diagonal())
            throw std::invalid_argument("make_cartan_data: cyclic Weyl action needs a diagonal c x cdual pairing");
        if (static_cast<int>(wa.cyclic->weights.size()) != 2 * k)
            throw std::invalid_argument("make_cartan_data: cyclic Weyl weights must cover s and t coordinates");
    } else {
        QMatrix t(2 * k, 2 * k);
        QMatrix tinv(2 * k, 2 * k);
        for (int a = 0; a < k; ++a) {
            t.at(a, a) = 1;
            tinv.at(a, a) = 1;
            for (int b = 0; b < k; ++b) {
                t.at(k + a, k + b) = p.at(a, b);
                tinv.at(k + a, k + b) = pinv.at(a, b);
            }
        }
        for (auto& w : wa.matrices) {
            if (w.rows() != 2 * k || w.cols() != 2 * k)
                throw std::invalid_argument("make_cartan_data: Weyl matrix must be 2k x 2k");
            w = t * w * tinv;
            if (!preserves_standard_symplectic_form(w))
                throw std::invalid_argument("make_cartan_data: Weyl generator does not preserve the symplectic form");
        }
    }

    CartanData cd;
    cd.c_basis = std::move(c_basis);
    cd.cdual_basis = std::move(dual_norm);
    cd.weyl = std::move(wa);
    cd.label = std::move(label);
    std::vector<std::string> vars;
    for (int a = 0; a < k; ++a) vars.push_back("s" + std::to_string(a + 1));
    for (int a = 0; a < k; ++a) vars.push_back("t" + std::to_string(a + 1));
    cd.st_ring = make_ring(std::move(vars));
    return cd;
}

Poly cartan_restrict(const Poly& p_on_double, const CartanData& cd) {
    const RingPtr& dring = p_on_double.ring();
    const int two_n = dring->nvars();
    if (two_n % 2) throw std::invalid_argument("cartan_restrict: source ring is not a double");
    const int n = two_n / 2;
    const int k = cd.rank();
    if (static_cast<int>(cd.c_basis[0].size()) != n)
        throw std::invalid_argument("cartan_restrict: Cartan vectors do not match dim V");
    std::vector<Poly> images;
    images.reserve(two_n);
    for (int i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (int a = 0; a < k; ++a) {
            if (is_zero(cd.c_basis[a][i])) continue;
            Term t;
            t.c = cd.c_basis[a][i];
            t.m = Monomial(2 * k);
            t.m.e[a] = 1;
            terms.push_back(std::move(t));
        }
        images.push_back(Poly::from_terms(cd.st_ring, std::move(terms)));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (int b = 0; b < k; ++b) {
            if (is_zero(cd.cdual_basis[b][i])) continue;
            Term t;
            t.c = cd.cdual_basis[b][i];
            t.m = Monomial(2 * k);
            t.m.e[k + b] = 1;
            terms.push_back(std::move(t));
        }
        images.push_back(Poly::from_terms(cd.st_ring, std::move(terms)));
    }
    return p_on_double.substitute(images, cd.st_ring);
}

bool weyl_fixes(const CartanData& cd, const Poly& p_on_st) {
    if (cd.weyl.is_cyclic()) {
        const auto& cy = *cd.weyl.cyclic;
        for (const auto& t : p_on_st.terms()) {
            long w = 0;
            for (std::size_t v = 0; v < cy.weights.size(); ++v) w += static_cast<long>(t.m.e[v]) * cy.weights[v];
            if (((w % cy.order) + cy.order) % cy.order != 0) return false;
        }
        return true;
    }
    for (const auto& wmat : cd.weyl.matrices) {
        Poly moved = p_on_st;
        {
            // substitute st coordinates through the matrix
            const int m = wmat.rows();
            std::vector<Poly> images;
            for (int i = 0; i < m; ++i) {
                std::vector<Term> terms;
                for (int j = 0; j < m; ++j) {
                    if (is_zero(wmat.at(i, j))) continue;
                    Term t;
                    t.c = wmat.at(i, j);
                    t.m = Monomial(m);
                    t.m.e[j] = 1;
                    terms.push_back(std::move(t));
                }
                images.push_back(Poly::from_terms(cd.st_ring, std::move(terms)));
            }
            moved = p_on_st.substitute(images, cd.st_ring);
        }
        if (!(moved == p_on_st)) return false;
    }
    return true;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::optional<std::vector<Rat>> in_span(const std::vector<QMatrix>& basis, const QMatrix& m) {
    if (basis.empty()) return m.is_zero() ? std::optional<std::vector<Rat>>{std::vector<Rat>{}} : std::nullopt;
    const int rows = basis[0].rows(), cols = basis[0].cols();
    QMatrix sys(rows * cols, static_cast<int>(basis.size()));
    std::vector<Rat> rhs(static_cast<std::size_t>(rows) * cols);
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) sys.at(i * cols + j, k) = basis[k].at(i, j);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) rhs[static_cast<std::size_t>(i) * cols + j] = m.at(i, j);
    return rat_solve(sys, rhs);
}

}  // namespace symchev
