#include "symchev/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace symchev {

std::vector<Poly> InvariantBasis::generators_of_degree(int d) const {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (generator_degrees[k] == d) out.push_back(generators[k]);
    return out;
}

Poly matrix_substitute(const QMatrix& g, const Poly& p) {
    const RingPtr& ring = p.ring();
    const int n = ring->nvars();
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("matrix_substitute: matrix size != nvars");
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < n; ++j) {
            if (is_zero(g.at(i, j))) continue;
            Term t;
            t.c = g.at(i, j);
            t.m = Monomial(n);
            t.m.e[j] = 1;
            terms.push_back(std::move(t));
        }
        images.push_back(Poly::from_terms(ring, std::move(terms)));
    }
    return p.substitute(images, ring);
}

Poly reynolds(const std::vector<QMatrix>& elements, const Poly& p) {
    if (elements.empty()) throw std::invalid_argument("reynolds: empty element list");
    Poly acc(p.ring());
    for (const auto& g : elements) acc = acc + matrix_substitute(g, p);
    return acc.scaled(rat(1, static_cast<long>(elements.size())));
}

MolienSeries molien(const std::vector<QMatrix>& elements, int truncation) {
    if (elements.empty()) throw std::invalid_argument("molien: empty element list");
    const int n = elements[0].rows();
    std::vector<Rat> total(truncation + 1);
    for (const auto& g : elements) {
        // det(1 - t g) via power sums and Newton's identities
        std::vector<Rat> psum(n + 1);
        QMatrix pw = g;
        for (int j = 1; j <= n; ++j) {
            Rat tr = 0;
            for (int i = 0; i < n; ++i) tr += pw.at(i, i);
            psum[j] = tr;
            if (j < n) pw = pw * g;
        }
        std::vector<Rat> e(n + 1);
        e[0] = 1;
        for (int k = 1; k <= n; ++k) {
            Rat s = 0;
            for (int i = 1; i <= k; ++i) s += (i % 2 ? psum[i] : -psum[i]) * e[k - i];
            e[k] = s / k;
        }
        std::vector<Rat> det(n + 1);  // coefficients of det(1 - t g)
        for (int k = 0; k <= n; ++k) det[k] = (k % 2 ? -e[k] : e[k]);
        // power series inverse
        std::vector<Rat> inv(truncation + 1);
        inv[0] = 1;
        for (int k = 1; k <= truncation; ++k) {
            Rat s = 0;
            for (int j = 1; j <= std::min(k, n); ++j) s += det[j] * inv[k - j];
            inv[k] = -s;
        }
        for (int k = 0; k <= truncation; ++k) total[k] += inv[k];
    }
    MolienSeries ms;
    for (int k = 0; k <= truncation; ++k) {
        Rat c = total[k] / static_cast<long>(elements.size());
        if (!is_integer(c) || sgn(c) < 0)
            throw std::logic_error("molien: non-integral or negative coefficient at degree " + std::to_string(k));
        ms.coeff.push_back(c.get_num());
    }
    return ms;
}

namespace {

std::vector<Poly> reynolds_images(const std::vector<QMatrix>& elements, const RingPtr& ring,
                                  const std::vector<Monomial>& monos, Exec exec) {
    std::vector<Poly> images(monos.size());
    if (exec == Exec::Omp) {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::size_t i = 0; i < monos.size(); ++i)
            images[i] = reynolds(elements, Poly::monomial(ring, monos[i], Rat(1)));
    } else {
        for (std::size_t i = 0; i < monos.size(); ++i)
            images[i] = reynolds(elements, Poly::monomial(ring, monos[i], Rat(1)));
    }
    return images;
}

}  // namespace

InvariantBasis finite_invariant_basis(const std::vector<QMatrix>& elements, const RingPtr& ring, int degree_bound,
                                      Exec exec) {
    MolienSeries ms = molien(elements, degree_bound);
    InvariantBasis basis;
    basis.ring = ring;
    basis.degree_bound = degree_bound;
    basis.source = "finite-reynolds";
    basis.by_degree.assign(degree_bound + 1, {});
    basis.by_degree[0] = {Poly::constant(ring, Rat(1))};
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Monomial> monos = monomials_of_degree(ring, d);
        std::vector<Poly> images = reynolds_images(elements, ring, monos, exec);
        PolySpan span = echelon_span(ring, images, exec);
        if (span.dim() != ms.coeff[d].get_si())
            throw std::logic_error("finite_invariant_basis: degree " + std::to_string(d) + " dimension " +
                                   std::to_string(span.dim()) + " != Molien coefficient " + ms.coeff[d].get_str());
        basis.by_degree[d] = span.basis();
    }
    // exactness check against the generators of the group
    for (const auto& list : basis.by_degree)
        for (const auto& p : list)
            for (const auto& g : elements)
                if (!(matrix_substitute(g, p) == p))
                    throw std::logic_error("finite_invariant_basis: non-invariant output " + p.to_string());
    flag_minimal_generators(basis, exec);
    return basis;
}

std::vector<Int> cyclic_diagonal_dimensions(const CyclicDiagonalAction& a, int truncation) {
    std::vector<Int> dims(truncation + 1);
    const int n = static_cast<int>(a.weights.size());
    // count monomials per degree with weight = 0 mod order
    std::function<void(int, int, int)> rec = [&](int var, int used, int residue) {
        if (var == n) {
            if (residue == 0) dims[used] += 1;
            return;
        }
        for (int e = 0; e + used <= truncation; ++e)
            rec(var + 1, used + e, ((residue + e * a.weights[var]) % a.order + a.order) % a.order);
    };
    rec(0, 0, 0);
    return dims;
}

InvariantBasis cyclic_diagonal_invariant_basis(const CyclicDiagonalAction& a, const RingPtr& ring,
                                               int degree_bound) {
    const int n = ring->nvars();
    if (static_cast<int>(a.weights.size()) != n)
        throw std::invalid_argument("cyclic_diagonal_invariant_basis: weight count != nvars");
    InvariantBasis basis;
    basis.ring = ring;
    basis.degree_bound = degree_bound;
    basis.source = "cyclic-diagonal";
    basis.by_degree.assign(degree_bound + 1, {});
    basis.by_degree[0] = {Poly::constant(ring, Rat(1))};
    for (int d = 1; d <= degree_bound; ++d)
        for (const auto& m : monomials_of_degree(ring, d)) {
            long w = 0;
            for (int v = 0; v < n; ++v) w += static_cast<long>(m.e[v]) * a.weights[v];
            if (((w % a.order) + a.order) % a.order == 0)
                basis.by_degree[d].push_back(Poly::monomial(ring, m, Rat(1)));
        }
    // generators: Hilbert basis of the congruence monoid
    MonoidProblem prob;
    prob.nvars = n;
    std::vector<Int> row;
    for (int w : a.weights) row.push_back(w);
    prob.congruences.push_back({row, Int(a.order)});
    for (const auto& u : monoid_hilbert_basis(prob)) {
        Monomial m(n);
        int deg = 0;
        for (int v = 0; v < n; ++v) {
            m.e[v] = static_cast<std::uint16_t>(u[v].get_si());
            deg += static_cast<int>(u[v].get_si());
        }
        basis.generators.push_back(Poly::monomial(ring, m, Rat(1)));
        basis.generator_degrees.push_back(deg);
    }
    return basis;
}

// ---------------------------------------------------------------------------

namespace {

void minimalize_vectors(std::vector<std::vector<Int>>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<std::vector<Int>> out;
    for (const auto& u : vs) {
        bool dominated = false;
        for (const auto& v : vs) {
            if (&u == &v || v == u) continue;
            bool le = true, nonzero = false;
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (v[i] > u[i]) {
                    le = false;
                    break;
                }
                if (v[i] != 0) nonzero = true;
            }
            if (le && nonzero) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(u);
    }
    vs = std::move(out);
}

std::vector<std::vector<Int>> refine_equality(const std::vector<std::vector<Int>>& h, const std::vector<Int>& row,
                                              std::size_t cap) {
    std::vector<Int> s(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        Int dot = 0;
        for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * h[k][i];
        s[k] = dot;
    }
    std::vector<std::size_t> pos, neg;
    std::vector<std::vector<Int>> out;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (s[k] == 0)
            out.push_back(h[k]);
        else if (s[k] > 0)
            pos.push_back(k);
        else
            neg.push_back(k);
    }
    if (pos.empty() || neg.empty()) {
        minimalize_vectors(out);
        return out;
    }
    Int bound_pos = 0, bound_neg = 0;  // Lambert bounds on lambda entries
    for (auto k : neg) bound_pos = std::max(bound_pos, Int(-s[k]));
    for (auto k : pos) bound_neg = std::max(bound_neg, s[k]);

    std::vector<std::size_t> mixed = pos;
    mixed.insert(mixed.end(), neg.begin(), neg.end());
    const std::size_t np = pos.size();
    std::vector<Int> lambda(mixed.size());

    // most negative / most positive value the remaining entries can add
    std::vector<Int> min_add(mixed.size() + 1), max_add(mixed.size() + 1);
    for (std::size_t k = mixed.size(); k-- > 0;) {
        min_add[k] = min_add[k + 1];
        max_add[k] = max_add[k + 1];
        Int sv = s[mixed[k]];
        if (sv < 0)
            min_add[k] += bound_neg * sv;
        else
            max_add[k] += bound_pos * sv;
    }

    std::function<void(std::size_t, Int)> rec = [&](std::size_t idx, Int sum) {
        if (sum + min_add[idx] > 0 || sum + max_add[idx] < 0) return;  // 0 unreachable
        if (idx == mixed.size()) {
            if (sum != 0) return;
            bool nonzero = false;
            for (const auto& l : lambda)
                if (l != 0) nonzero = true;
            if (!nonzero) return;
            std::vector<Int> u(row.size());
            for (std::size_t k = 0; k < mixed.size(); ++k)
                if (lambda[k] != 0)
                    for (std::size_t i = 0; i < row.size(); ++i) u[i] += lambda[k] * h[mixed[k]][i];
            out.push_back(std::move(u));
            if (out.size() > cap) throw std::runtime_error("monoid_hilbert_basis: basis-size cap exceeded");
            return;
        }
        Int b = idx < np ? bound_pos : bound_neg;
        for (Int l = 0; l <= b; ++l) {
            lambda[idx] = l;
            rec(idx + 1, sum + l * s[mixed[idx]]);
        }
        lambda[idx] = 0;
    };
    rec(0, Int(0));
    minimalize_vectors(out);
    return out;
}

std::vector<std::vector<Int>> refine_congruence(const std::vector<std::vector<Int>>& h, const std::vector<Int>& row,
                                                const Int& modulus, std::size_t cap) {
    std::vector<Int> s(h.size());
    std::vector<std::size_t> active;
    std::vector<std::vector<Int>> out;
    for (std::size_t k = 0; k < h.size(); ++k) {
        Int dot = 0;
        for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * h[k][i];
        s[k] = ((dot % modulus) + modulus) % modulus;
        if (s[k] == 0)
            out.push_back(h[k]);
        else
            active.push_back(k);
    }
    // pure solutions: (m / gcd(s, m)) copies of one generator
    std::vector<Int> pure_bound(active.size());
    for (std::size_t a = 0; a < active.size(); ++a) {
        Int g;
        mpz_gcd(g.get_mpz_t(), s[active[a]].get_mpz_t(), modulus.get_mpz_t());
        pure_bound[a] = modulus / g;
        std::vector<Int> u(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) u[i] = pure_bound[a] * h[active[a]][i];
        out.push_back(std::move(u));
    }
    // mixed solutions with entries below the pure bounds
    std::vector<Int> lambda(active.size());
    std::function<void(std::size_t, Int)> rec = [&](std::size_t idx, Int residue) {
        if (idx == active.size()) {
            if (residue != 0) return;
            int support = 0;
            for (const auto& l : lambda)
                if (l != 0) ++support;
            if (support < 2) return;  // pure ones are already in
            std::vector<Int> u(row.size());
            for (std::size_t k = 0; k < active.size(); ++k)
                if (lambda[k] != 0)
                    for (std::size_t i = 0; i < row.size(); ++i) u[i] += lambda[k] * h[active[k]][i];
            out.push_back(std::move(u));
            if (out.size() > cap) throw std::runtime_error("monoid_hilbert_basis: basis-size cap exceeded");
            return;
        }
        for (Int l = 0; l < pure_bound[idx]; ++l) {
            lambda[idx] = l;
            rec(idx + 1, ((residue + l * s[active[idx]]) % modulus + modulus) % modulus);
        }
        lambda[idx] = 0;
    };
    rec(0, Int(0));
    minimalize_vectors(out);
    return out;
}

}  // namespace

std::vector<std::vector<Int>> monoid_hilbert_basis(const MonoidProblem& prob, std::size_t size_cap) {
    std::vector<std::vector<Int>> h;
    for (int i = 0; i < prob.nvars; ++i) {
        std::vector<Int> e(prob.nvars);
        e[i] = 1;
        h.push_back(std::move(e));
    }
    for (const auto& row : prob.eq_rows) h = refine_equality(h, row, size_cap);
    for (const auto& [row, m] : prob.congruences) h = refine_congruence(h, row, m, size_cap);
    minimalize_vectors(h);
    std::sort(h.begin(), h.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int da = std::accumulate(a.begin(), a.end(), Int(0));
        Int db = std::accumulate(b.begin(), b.end(), Int(0));
        if (da != db) return da < db;
        return a < b;
    });
    return h;
}

std::vector<Monomial> zero_weight_monomials(const ZMatrix& weights, int nvars, int degree) {
    std::vector<Monomial> out;
    const int rows = weights.rows();
    std::vector<std::vector<Int>> tail_max(nvars + 1, std::vector<Int>(rows, Int(0)));
    for (int v = nvars; v-- > 0;) {
        for (int r = 0; r < rows; ++r) {
            Int a = abs(weights.at(r, v));
            tail_max[v][r] = std::max(tail_max[v + 1][r], a);
        }
    }
    Monomial cur(nvars);
    std::vector<Int> partial(rows);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars) {
            if (remaining != 0) return;
            for (int r = 0; r < rows; ++r)
                if (partial[r] != 0) return;
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < rows; ++r)
            if (abs(partial[r]) > tail_max[var][r] * remaining) return;  // cannot return to zero
        for (int e = 0; e <= remaining; ++e) {
            cur.e[var] = static_cast<std::uint16_t>(e);
            rec(var + 1, remaining - e);
            if (e < remaining)
                for (int r = 0; r < rows; ++r) partial[r] += weights.at(r, var);
        }
        for (int r = 0; r < rows; ++r) partial[r] -= weights.at(r, var) * remaining;
        cur.e[var] = 0;
    };
    rec(0, degree);
    return out;
}

InvariantBasis torus_invariant_basis(const ZMatrix& double_weights, const RingPtr& ring, int degree_bound) {
    const int n = ring->nvars();
    if (double_weights.cols() != n) throw std::invalid_argument("torus_invariant_basis: weight columns != nvars");
    InvariantBasis basis;
    basis.ring = ring;
    basis.degree_bound = degree_bound;
    basis.source = "torus-hilbert";
    basis.by_degree.assign(degree_bound + 1, {});
    basis.by_degree[0] = {Poly::constant(ring, Rat(1))};
    MonomialOrder ord = ring->grevlex();
    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Monomial> zs = zero_weight_monomials(double_weights, n, d);
        std::sort(zs.begin(), zs.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
        for (const auto& m : zs) basis.by_degree[d].push_back(Poly::monomial(ring, m, Rat(1)));
    }
    MonoidProblem prob;
    prob.nvars = n;
    for (int r = 0; r < double_weights.rows(); ++r) {
        std::vector<Int> row(n);
        for (int j = 0; j < n; ++j) row[j] = double_weights.at(r, j);
        prob.eq_rows.push_back(std::move(row));
    }
    for (const auto& u : monoid_hilbert_basis(prob)) {
        Monomial m(n);
        int deg = 0;
        for (int v = 0; v < n; ++v) {
            if (!u[v].fits_sint_p()) throw std::runtime_error("torus_invariant_basis: generator exponent overflow");
            m.e[v] = static_cast<std::uint16_t>(u[v].get_si());
            deg += static_cast<int>(u[v].get_si());
        }
        basis.generators.push_back(Poly::monomial(ring, m, Rat(1)));
        basis.generator_degrees.push_back(deg);
    }
    return basis;
}

// ---------------------------------------------------------------------------

Poly apply_derivation(const QMatrix& action, const Poly& p) {
    const RingPtr& ring = p.ring();
    const int n = ring->nvars();
    if (action.rows() != n || action.cols() != n) throw std::invalid_argument("apply_derivation: size mismatch");
    std::vector<Term> terms;
    for (const auto& t : p.terms())
        for (int i = 0; i < n; ++i) {
            if (!t.m.e[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (is_zero(action.at(i, j))) continue;
                Term nt;
                nt.c = t.c * t.m.e[i] * action.at(i, j);
                nt.m = t.m;
                nt.m.e[i] -= 1;
                nt.m.e[j] += 1;
                terms.push_back(std::move(nt));
            }
        }
    return Poly::from_terms(ring, std::move(terms));
}

bool is_invariant_under_derivation(const QMatrix& action, const Poly& p) {
    return apply_derivation(action, p).is_zero();
}

bool is_invariant_under_substitution(const QMatrix& g, const Poly& p) { return matrix_substitute(g, p) == p; }

namespace {

// Variables mixed by any action matrix belong to one component; monomial
// multidegrees over components are preserved by every derivation, which
// splits the kernel computation into small independent blocks.
std::vector<int> variable_components(const std::vector<QMatrix>& action, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (const auto& m : action)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !is_zero(m.at(i, j))) parent[find(i)] = find(j);
    std::vector<int> comp(n), remap(n, -1);
    int count = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (remap[r] < 0) remap[r] = count++;
        comp[v] = remap[r];
    }
    return comp;
}

}  // namespace

InvariantBasis lie_invariant_basis(const std::vector<QMatrix>& action, const RingPtr& ring,
                                   const LieInvariantOptions& opt) {
    const int n = ring->nvars();
    for (const auto& m : action)
        if (m.rows() != n || m.cols() != n) throw std::invalid_argument("lie_invariant_basis: matrix size != nvars");

    std::vector<const QMatrix*> diag, offdiag;
    for (const auto& m : action) (m.is_diagonal() ? diag : offdiag).push_back(&m);

    std::vector<int> comp = variable_components(action, n);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    InvariantBasis basis;
    basis.ring = ring;
    basis.degree_bound = opt.degree_bound;
    basis.source = "lie-derivation";
    basis.by_degree.assign(opt.degree_bound + 1, {});
    basis.by_degree[0] = {Poly::constant(ring, Rat(1))};

    MonomialOrder ord = ring->grevlex();
    for (int d = 1; d <= opt.degree_bound; ++d) {
        // split the degree-d monomials by component multidegree, keeping only
        // those annihilated by every diagonal derivation (exact weight test)
        std::map<std::vector<int>, std::vector<Monomial>> blocks;
        for (const auto& m : monomials_of_degree(ring, d)) {
            bool weight_zero = true;
            for (const QMatrix* dm : diag) {
                Rat w = 0;
                for (int v = 0; v < n; ++v)
                    if (m.e[v]) w += Rat(static_cast<long>(m.e[v])) * dm->at(v, v);
                if (!is_zero(w)) {
                    weight_zero = false;
                    break;
                }
            }
            if (!weight_zero) continue;
            std::vector<int> key(ncomp, 0);
            for (int v = 0; v < n; ++v) key[comp[v]] += m.e[v];
            blocks[key].push_back(m);
        }

        std::vector<std::vector<Monomial>> block_list;
        for (auto& [key, monos] : blocks) {
            if (monos.size() > opt.block_cap)
                throw std::runtime_error("lie_invariant_basis: block size " + std::to_string(monos.size()) +
                                         " exceeds cap (raise block_cap)");
            std::sort(monos.begin(), monos.end(),
                      [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
            block_list.push_back(std::move(monos));
        }

        std::vector<std::vector<Poly>> block_out(block_list.size());
        auto solve_block = [&](std::size_t bi) {
            const auto& monos = block_list[bi];
            const int nm = static_cast<int>(monos.size());

            // candidate subspace of the block, cut down by one off-diagonal
            // derivation at a time; images may leave the weight-zero block,
            // so each derivation matrix is rectangular over its own support
            QMatrix cols = QMatrix::identity(nm);
            bool first_round = true;
            for (const QMatrix* om : offdiag) {
                if (cols.cols() == 0) break;
                std::vector<Poly> cand;
                if (first_round) {
                    for (const auto& m : monos) cand.push_back(Poly::monomial(ring, m, Rat(1)));
                } else {
                    for (int j = 0; j < cols.cols(); ++j) {
                        std::vector<Term> terms;
                        for (int i = 0; i < nm; ++i)
                            if (!is_zero(cols.at(i, j))) terms.push_back({monos[i], cols.at(i, j)});
                        cand.push_back(Poly::from_terms(ring, std::move(terms)));
                    }
                }
                std::vector<Poly> images;
                images.reserve(cand.size());
                std::map<std::vector<std::uint16_t>, int> row_index;
                for (const auto& c : cand) {
                    images.push_back(apply_derivation(*om, c));
                    for (const auto& t : images.back().terms()) row_index.emplace(t.m.e, 0);
                }
                int nr = 0;
                for (auto& [key, idx] : row_index) idx = nr++;
                QMatrix sys(nr, static_cast<int>(cand.size()));
                for (int j = 0; j < sys.cols(); ++j)
                    for (const auto& t : images[static_cast<std::size_t>(j)].terms())
                        sys.at(row_index[t.m.e], j) = t.c;
                std::vector<std::vector<Rat>> ker = rat_kernel(sys, opt.exec);
                QMatrix next(static_cast<int>(cand.size()), static_cast<int>(ker.size()));
                for (int j = 0; j < next.cols(); ++j)
                    for (int i = 0; i < next.rows(); ++i) next.at(i, j) = ker[static_cast<std::size_t>(j)][i];
                cols = cols * next;
                first_round = false;
            }
            for (int j = 0; j < cols.cols(); ++j) {
                std::vector<Term> terms;
                for (int i = 0; i < nm; ++i)
                    if (!is_zero(cols.at(i, j))) terms.push_back({monos[i], cols.at(i, j)});
                block_out[bi].push_back(Poly::from_terms(ring, std::move(terms)));
            }
        };

        if (opt.exec == Exec::Omp) {
#pragma omp parallel for schedule(dynamic)
            for (std::size_t bi = 0; bi < block_list.size(); ++bi) solve_block(bi);
        } else {
            for (std::size_t bi = 0; bi < block_list.size(); ++bi) solve_block(bi);
        }

        std::vector<Poly> all;
        for (auto& v : block_out) all.insert(all.end(), v.begin(), v.end());
        PolySpan span = echelon_span(ring, all, opt.exec);
        basis.by_degree[d] = span.basis();
    }

    for (const auto& list : basis.by_degree)
        for (const auto& p : list)
            for (const auto& m : action)
                if (!is_invariant_under_derivation(m, p))
                    throw std::logic_error("lie_invariant_basis: non-invariant output " + p.to_string());
    flag_minimal_generators(basis, opt.exec);
    return basis;
}

InvariantBasis explicit_invariant_basis(std::vector<Poly> gens, const std::vector<QMatrix>& lie_action,
                                        const std::vector<QMatrix>& finite_elements, const ZMatrix* torus_weights,
                                        int degree_bound) {
    if (gens.empty()) throw std::invalid_argument("explicit_invariant_basis: empty generator list");
    InvariantBasis basis;
    basis.ring = gens[0].ring();
    basis.degree_bound = degree_bound;
    basis.source = "explicit";
    basis.by_degree.assign(degree_bound + 1, {});
    basis.by_degree[0] = {Poly::constant(basis.ring, Rat(1))};
    for (const auto& g : gens) {
        for (const auto& m : lie_action)
            if (!is_invariant_under_derivation(m, g))
                throw std::invalid_argument("explicit_invariant_basis: not Lie-invariant: " + g.to_string());
        for (const auto& e : finite_elements)
            if (!is_invariant_under_substitution(e, g))
                throw std::invalid_argument("explicit_invariant_basis: not group-invariant: " + g.to_string());
        if (torus_weights) {
            for (const auto& t : g.terms()) {
                for (int r = 0; r < torus_weights->rows(); ++r) {
                    Int w = 0;
                    for (int v = 0; v < basis.ring->nvars(); ++v)
                        w += torus_weights->at(r, v) * static_cast<long>(t.m.e[v]);
                    if (w != 0)
                        throw std::invalid_argument("explicit_invariant_basis: nonzero weight: " + g.to_string());
                }
            }
        }
        int d = g.total_degree();
        if (d >= 1 && d <= degree_bound) basis.by_degree[d].push_back(g);
        basis.generators.push_back(g);
        basis.generator_degrees.push_back(d);
    }
    return basis;
}

void flag_minimal_generators(InvariantBasis& basis, Exec exec) {
    basis.generators.clear();
    basis.generator_degrees.clear();
    for (int d = 1; d <= basis.degree_bound; ++d) {
        if (basis.by_degree[d].empty()) continue;
        // span of all products of lower-degree generators with degree sum d
        std::vector<Poly> products;
        std::function<void(std::size_t, int, Poly)> build = [&](std::size_t from, int remaining, Poly acc) {
            for (std::size_t k = from; k < basis.generators.size(); ++k) {
                int gd = basis.generator_degrees[k];
                if (gd > remaining) continue;
                Poly next = acc * basis.generators[k];
                if (gd == remaining)
                    products.push_back(next);
                else
                    build(k, remaining - gd, next);
            }
        };
        // at least two factors: start from each generator of degree < d
        for (std::size_t k = 0; k < basis.generators.size(); ++k) {
            int gd = basis.generator_degrees[k];
            if (gd < d) build(k, d - gd, basis.generators[k]);
        }
        PolySpan span = echelon_span(basis.ring, products, exec);
        for (const auto& b : basis.by_degree[d]) {
            Poly fresh = span.insert(b);
            if (!fresh.is_zero()) {
                basis.generators.push_back(fresh);
                basis.generator_degrees.push_back(d);
            }
        }
    }
}

}  // namespace symchev
