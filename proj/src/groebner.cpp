#include "symchev/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "symchev/cache.hpp"

namespace symchev {

Ideal Ideal::make(RingPtr ring, std::vector<Poly> gens) {
    Ideal i;
    i.ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same(*i.ring)) throw std::invalid_argument("Ideal::make: generator outside ring");
        i.gens.push_back(std::move(g));
    }
    return i;
}

std::string Ideal::canonical_key() const {
    std::vector<std::string> strs;
    strs.reserve(gens.size());
    for (const auto& g : gens) strs.push_back(g.primitive().to_string());
    std::sort(strs.begin(), strs.end());
    std::ostringstream os;
    os << ring->describe();
    for (int w : ring->weights()) os << "," << w;
    for (const auto& s : strs) os << ";" << s;
    return os.str();
}

bool GroebnerBasis::contains_one() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(g.leading_term(order).m);
    return lts;
}

namespace {

// Working polynomial: terms sorted descending under the engine order.
struct EPoly {
    std::vector<Term> t;
    bool empty() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

EPoly to_epoly(const Poly& p, const MonomialOrder& ord) {
    EPoly e;
    e.t = p.terms();
    std::sort(e.t.begin(), e.t.end(), [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    return e;
}

Poly to_poly(const EPoly& e, const RingPtr& ring) { return Poly::from_terms(ring, e.t); }

// dst += c * x^m * src, merged in one pass.
void eaxpy(EPoly& dst, const Rat& c, const Monomial& m, const EPoly& src, const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(dst.t.size() + src.t.size());
    std::size_t i = 0, j = 0;
    while (i < dst.t.size() || j < src.t.size()) {
        int cm;
        Monomial sm;
        if (j < src.t.size()) sm = src.t[j].m * m;
        if (i >= dst.t.size())
            cm = -1;
        else if (j >= src.t.size())
            cm = 1;
        else
            cm = ord.compare(dst.t[i].m, sm);
        if (cm > 0)
            out.push_back(std::move(dst.t[i++]));
        else if (cm < 0) {
            Rat v = c * src.t[j].c;
            if (!is_zero(v)) out.push_back({std::move(sm), std::move(v)});
            ++j;
        } else {
            Rat s = dst.t[i].c + c * src.t[j].c;
            if (!is_zero(s)) out.push_back({std::move(dst.t[i].m), std::move(s)});
            ++i, ++j;
        }
    }
    dst.t = std::move(out);
}

// Remove rational content: integer coefficients, content 1, positive lead.
void make_primitive(EPoly& p) {
    if (p.empty()) return;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.t) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
    }
    Rat f = rat(den_lcm, num_gcd);
    if (sgn(p.t.front().c) < 0) f = -f;
    for (auto& t : p.t) t.c *= f;
}

struct Engine {
    RingPtr ring;
    MonomialOrder ord;
    BudgetClock& clock;
    std::vector<EPoly> g;        // basis elements, primitive
    std::vector<Monomial> lt;    // cached leading monomials
    std::vector<long> ltdeg;     // cached weighted degrees of leading monomials

    Engine(RingPtr r, MonomialOrder o, BudgetClock& c) : ring(std::move(r)), ord(std::move(o)), clock(c) {}

    // Full reduction: complete remainder against the current basis. The
    // divisor scan order is fixed (ascending index), so intermediate results
    // are deterministic even before the basis is reduced.
    EPoly reduce_full(EPoly p) const {
        std::vector<Term> out;
        while (!p.empty()) {
            // move the maximal irreducible prefix out of the way
            std::size_t r = 0;
            int div = -1;
            for (; r < p.t.size() && div < 0; ++r) {
                long hd = p.t[r].m.weighted_degree(ord.weights);
                for (std::size_t k = 0; k < g.size(); ++k)
                    if (ltdeg[k] <= hd && lt[k].divides(p.t[r].m)) {
                        div = static_cast<int>(k);
                        break;
                    }
                if (div >= 0) break;
            }
            out.insert(out.end(), std::make_move_iterator(p.t.begin()),
                       std::make_move_iterator(p.t.begin() + static_cast<std::ptrdiff_t>(r)));
            p.t.erase(p.t.begin(), p.t.begin() + static_cast<std::ptrdiff_t>(r));
            if (div < 0) break;
            clock.tick();
            Monomial q = p.t.front().m / lt[div];
            Rat c = -p.t.front().c / g[div].lt().c;
            eaxpy(p, c, q, g[div], ord);
        }
        EPoly res;
        res.t = std::move(out);
        return res;
    }

    EPoly spoly(int i, int j) const {
        Monomial l = lt[i].lcm(lt[j]);
        EPoly s;
        eaxpy(s, g[j].lt().c, l / lt[i], g[i], ord);
        eaxpy(s, -g[i].lt().c, l / lt[j], g[j], ord);
        return s;
    }
};

struct Pair {
    int i, j;  // i < j
    Monomial lcm;
    long deg;  // weighted degree of lcm
};

// Normal selection: smallest lcm degree, then smallest (j, i).
bool pair_before(const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

class PairQueue {
  public:
    // Gebauer-Moeller update for a newly appended basis element s.
    void update(const Engine& eng, int s) {
        const auto& lts = eng.lt;
        // prune old pairs by the chain criterion
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (auto& p : pairs_) {
            Monomial lis = lts[p.i].lcm(lts[s]);
            Monomial ljs = lts[p.j].lcm(lts[s]);
            if (lts[s].divides(p.lcm) && !(lis == p.lcm) && !(ljs == p.lcm)) continue;
            kept.push_back(std::move(p));
        }
        pairs_ = std::move(kept);

        // candidate new pairs (i, s)
        struct Cand {
            int i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < s; ++i)
            cands.push_back({i, lts[i].lcm(lts[s]), lts[i].coprime(lts[s])});
        // drop candidates whose lcm is properly divisible by another's
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a)
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (cands[b].lcm.divides(cands[a].lcm) && !(cands[b].lcm == cands[a].lcm)) drop[a] = true;
            }
        // among equal lcms keep the first, preferring a coprime representative
        // (if any pair with this lcm is coprime the whole class is redundant)
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            bool class_coprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (drop[b] || !(cands[b].lcm == cands[a].lcm)) continue;
                drop[b] = true;
                class_coprime = class_coprime || cands[b].coprime;
            }
            if (class_coprime) drop[a] = true;  // product criterion
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            Pair p;
            p.i = cands[a].i;
            p.j = s;
            p.deg = cands[a].lcm.weighted_degree(eng.ord.weights);
            p.lcm = std::move(cands[a].lcm);
            pairs_.push_back(std::move(p));
        }
    }

    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    Pair pop() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k)
            if (pair_before(pairs_[k], pairs_[best])) best = k;
        Pair p = std::move(pairs_[best]);
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }

  private:
    std::vector<Pair> pairs_;
};

// Keep only elements with minimal leading monomials, tail-reduce each
// against the others, sort ascending by leading monomial, make monic.
std::vector<EPoly> interreduce(Engine& eng) {
    std::vector<int> order_idx(eng.g.size());
    for (std::size_t k = 0; k < eng.g.size(); ++k) order_idx[k] = static_cast<int>(k);
    std::sort(order_idx.begin(), order_idx.end(),
              [&](int a, int b) { return eng.ord.compare(eng.lt[a], eng.lt[b]) < 0; });

    std::vector<int> kept;
    for (int idx : order_idx) {
        bool divisible = false;
        for (int k : kept)
            if (eng.lt[k].divides(eng.lt[idx])) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(idx);
    }

    Engine fin(eng.ring, eng.ord, eng.clock);
    for (int idx : kept) {
        fin.g.push_back(eng.g[idx]);
        fin.lt.push_back(eng.lt[idx]);
        fin.ltdeg.push_back(eng.lt[idx].weighted_degree(eng.ord.weights));
    }
    // tail reduction: replace each element by its normal form against the rest
    for (std::size_t k = 0; k < fin.g.size(); ++k) {
        EPoly self = std::move(fin.g[k]);
        fin.g[k] = EPoly{};
        Monomial saved_lt = fin.lt[k];
        fin.ltdeg[k] = std::numeric_limits<long>::max();  // degree prefilter skips this slot
        EPoly red = fin.reduce_full(std::move(self));
        make_primitive(red);
        fin.g[k] = std::move(red);
        fin.lt[k] = saved_lt;
        fin.ltdeg[k] = saved_lt.weighted_degree(fin.ord.weights);
    }
    return std::move(fin.g);
}

}  // namespace

GroebnerBasis buchberger(const Ideal& input, const MonomialOrder& order, const Budget& budget, GbCache* cache) {
    Fnv1a fp;
    fp.feed(input.canonical_key());
    fp.feed(order.describe());
    std::ostringstream fps;
    fps << std::hex << fp.h;
    const std::string fingerprint = fps.str();

    if (cache) {
        if (auto hit = cache->lookup(fingerprint, input, order)) return *hit;
    }

    BudgetClock clock(budget);
    Engine eng(input.ring, order, clock);
    PairQueue queue;

    // deterministic seeding: primitive generators sorted ascending by LT
    std::vector<EPoly> seed;
    for (const auto& p : input.gens) {
        EPoly e = to_epoly(p, order);
        make_primitive(e);
        if (!e.empty()) seed.push_back(std::move(e));
    }
    std::sort(seed.begin(), seed.end(),
              [&](const EPoly& a, const EPoly& b) { return order.compare(a.lt().m, b.lt().m) < 0; });
    for (auto& e : seed) {
        EPoly red = eng.reduce_full(std::move(e));
        make_primitive(red);
        if (red.empty()) continue;
        eng.g.push_back(std::move(red));
        eng.lt.push_back(eng.g.back().lt().m);
        eng.ltdeg.push_back(eng.lt.back().weighted_degree(order.weights));
        queue.update(eng, static_cast<int>(eng.g.size()) - 1);
    }

    while (!queue.empty()) {
        Pair p = queue.pop();
        EPoly s = eng.spoly(p.i, p.j);
        EPoly red = eng.reduce_full(std::move(s));
        if (red.empty()) continue;
        make_primitive(red);
        eng.g.push_back(std::move(red));
        eng.lt.push_back(eng.g.back().lt().m);
        eng.ltdeg.push_back(eng.lt.back().weighted_degree(order.weights));
        queue.update(eng, static_cast<int>(eng.g.size()) - 1);
    }

    std::vector<EPoly> reduced = interreduce(eng);

    // Construction-time check: the reduced basis must again pass the pair
    // loop without producing anything new.
    {
        Engine chk(input.ring, order, clock);
        PairQueue q2;
        for (auto& e : reduced) {
            chk.g.push_back(e);
            chk.lt.push_back(e.lt().m);
            chk.ltdeg.push_back(e.lt().m.weighted_degree(order.weights));
            q2.update(chk, static_cast<int>(chk.g.size()) - 1);
        }
        while (!q2.empty()) {
            Pair p = q2.pop();
            EPoly s = chk.spoly(p.i, p.j);
            EPoly red = chk.reduce_full(std::move(s));
            if (!red.empty())
                throw std::logic_error("buchberger: reduced basis failed the S-polynomial check");
        }
    }

    GroebnerBasis gb;
    gb.ring = input.ring;
    gb.order = order;
    gb.fingerprint = fingerprint;
    for (auto& e : reduced) {
        Poly p = to_poly(e, input.ring);
        gb.basis.push_back(p.scaled(1 / e.lt().c));
    }
    if (cache) cache->store(gb, input);
    return gb;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb, BudgetClock& clock) {
    if (!p.ring()->same(*gb.ring)) throw std::invalid_argument("normal_form: ring mismatch");
    Engine eng(gb.ring, gb.order, clock);
    for (const auto& g : gb.basis) {
        eng.g.push_back(to_epoly(g, gb.order));
        eng.lt.push_back(eng.g.back().lt().m);
        eng.ltdeg.push_back(eng.lt.back().weighted_degree(gb.order.weights));
    }
    EPoly red = eng.reduce_full(to_epoly(p, gb.order));
    return to_poly(red, gb.ring);
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    BudgetClock clock(Budget{.max_steps = 100'000'000, .max_seconds = 3600.0});
    return normal_form(p, gb, clock);
}

Ideal eliminate(const Ideal& i, int first_k, const Budget& budget, GbCache* cache) {
    const int n = i.ring->nvars();
    if (first_k <= 0 || first_k >= n) throw std::invalid_argument("eliminate: need 0 < k < nvars");
    MonomialOrder ord = block_order(i.ring->weights(), first_k, OrderKind::Lex);
    GroebnerBasis gb = buchberger(i, ord, budget, cache);

    std::vector<std::string> tail_vars(i.ring->vars().begin() + first_k, i.ring->vars().end());
    std::vector<int> tail_weights(i.ring->weights().begin() + first_k, i.ring->weights().end());
    RingPtr tail_ring = make_ring(tail_vars, tail_weights);

    std::vector<Poly> kept;
    for (const auto& g : gb.basis) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (int v = 0; v < first_k && pure; ++v)
                if (t.m.e[v]) pure = false;
        if (!pure) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Term nt;
            nt.c = t.c;
            nt.m = Monomial(n - first_k);
            for (int v = first_k; v < n; ++v) nt.m.e[v - first_k] = t.m.e[v];
            terms.push_back(std::move(nt));
        }
        kept.push_back(Poly::from_terms(tail_ring, std::move(terms)));
    }
    return Ideal::make(tail_ring, std::move(kept));
}

RadicalVerdict radical_member(const Poly& p, const Ideal& i, int cap, const Budget& budget, GbCache* cache) {
    if (cap < 1) throw std::invalid_argument("radical_member: cap must be >= 1");
    GroebnerBasis gb = buchberger(i, i.ring->grevlex(), budget, cache);
    BudgetClock clock(budget);
    Poly power = Poly::constant(i.ring, Rat(1));
    for (int k = 1; k <= cap; ++k) {
        power = power * p;
        if (normal_form(power, gb, clock).is_zero()) return {true, k, false};
    }
    // Rabinowitsch: p in sqrt(i) iff 1 in i + (1 - t p) in the extended ring.
    std::vector<std::string> vars = i.ring->vars();
    std::string tname = "rab_t";
    while (i.ring->var_index(tname) >= 0) tname += "_";
    vars.push_back(tname);
    RingPtr ext = make_ring(vars);
    std::vector<Poly> gens;
    for (const auto& g : i.gens) gens.push_back(lift_to_ring(g, ext));
    Poly one = Poly::constant(ext, Rat(1));
    gens.push_back(one - Poly::variable(ext, ext->nvars() - 1) * lift_to_ring(p, ext));
    GroebnerBasis egb = buchberger(Ideal::make(ext, std::move(gens)), ext->grevlex(), budget, cache);
    if (egb.contains_one()) return {true, std::nullopt, true};
    return {false, std::nullopt, false};
}

Ideal subalgebra_relations(const Ideal& i, const std::vector<Poly>& gens,
                           const std::vector<std::string>& tag_names, const Budget& budget, GbCache* cache) {
    if (gens.empty()) throw std::invalid_argument("subalgebra_relations: needs at least one generator");
    if (!tag_names.empty() && tag_names.size() != gens.size())
        throw std::invalid_argument("subalgebra_relations: tag name count mismatch");
    const int n = i.ring->nvars();
    std::vector<std::string> vars = i.ring->vars();
    std::vector<int> weights = i.ring->weights();
    std::vector<std::string> tags;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!gens[k].ring()->same(*i.ring)) throw std::invalid_argument("subalgebra_relations: generator outside ring");
        std::string name = tag_names.empty() ? "T" + std::to_string(k + 1) : tag_names[k];
        tags.push_back(name);
        vars.push_back(name);
        long wd = gens[k].weighted_degree();
        weights.push_back(wd > 0 ? static_cast<int>(wd) : 1);
    }
    RingPtr ext = make_ring(vars, weights);
    std::vector<Poly> egens;
    for (const auto& g : i.gens) egens.push_back(lift_to_ring(g, ext));
    for (std::size_t k = 0; k < gens.size(); ++k)
        egens.push_back(Poly::variable(ext, n + static_cast<int>(k)) - lift_to_ring(gens[k], ext));
    Ideal extended = Ideal::make(ext, std::move(egens));
    return eliminate(extended, n, budget, cache);
}

bool verify_all_spolys(const GroebnerBasis& gb, const Budget& budget) {
    BudgetClock clock(budget);
    Engine eng(gb.ring, gb.order, clock);
    for (const auto& g : gb.basis) {
        eng.g.push_back(to_epoly(g, gb.order));
        eng.lt.push_back(eng.g.back().lt().m);
        eng.ltdeg.push_back(eng.lt.back().weighted_degree(gb.order.weights));
    }
    for (std::size_t i = 0; i < eng.g.size(); ++i)
        for (std::size_t j = i + 1; j < eng.g.size(); ++j) {
            EPoly s = eng.spoly(static_cast<int>(i), static_cast<int>(j));
            if (!eng.reduce_full(std::move(s)).empty()) return false;
        }
    return true;
}

Poly lift_to_ring(const Poly& p, const RingPtr& target) {
    const RingPtr& src = p.ring();
    std::vector<int> map(src->nvars());
    for (int v = 0; v < src->nvars(); ++v) {
        map[v] = target->var_index(src->var(v));
        if (map[v] < 0)
            throw std::invalid_argument("lift_to_ring: variable '" + src->var(v) + "' missing from target");
    }
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Term nt;
        nt.c = t.c;
        nt.m = Monomial(target->nvars());
        for (int v = 0; v < src->nvars(); ++v) nt.m.e[map[v]] = t.m.e[v];
        terms.push_back(std::move(nt));
    }
    return Poly::from_terms(target, std::move(terms));
}

}  // namespace symchev
