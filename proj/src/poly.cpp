#include "symchev/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symchev {

void require_same_ring(const Poly& a, const Poly& b, const char* what) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
        throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

Poly Poly::constant(RingPtr ring, const Rat& c) {
    Poly p(ring);
    if (!symchev::is_zero(c)) p.t_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Poly Poly::variable(const RingPtr& ring, int index) {
    if (index < 0 || index >= ring->nvars()) throw std::out_of_range("Poly::variable: bad index");
    Monomial m(ring->nvars());
    m.e[index] = 1;
    return monomial(ring, std::move(m), Rat(1));
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rat& c) {
    Poly p(std::move(ring));
    if (!symchev::is_zero(c)) p.t_.push_back({std::move(m), c});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.t_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    MonomialOrder ord = ring_->grevlex();
    std::sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && symchev::is_zero(out.back().c)) out.pop_back();
    }
    t_ = std::move(out);
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o, "poly add");
    MonomialOrder ord = ring_->grevlex();
    Poly r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        int c;
        if (i >= t_.size())
            c = -1;
        else if (j >= o.t_.size())
            c = 1;
        else
            c = ord.compare(t_[i].m, o.t_[j].m);
        if (c > 0)
            r.t_.push_back(t_[i++]);
        else if (c < 0)
            r.t_.push_back(o.t_[j++]);
        else {
            Rat s = t_[i].c + o.t_[j].c;
            if (!symchev::is_zero(s)) r.t_.push_back({t_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Rat& c) const {
    if (symchev::is_zero(c)) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
    if (symchev::is_zero(c)) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.t_) {
        t.m = t.m * m;
        t.c *= c;
    }
    return r;  // multiplying by a monomial preserves the term order
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o, "poly mul");
    if (is_zero() || o.is_zero()) return Poly(ring_);
    std::vector<Term> acc;
    acc.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) acc.push_back({a.m * b.m, a.c * b.c});
    return from_terms(ring_, std::move(acc));
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = constant(ring_, Rat(1));
    Poly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_) return t_.empty() && o.t_.empty();
    if (!ring_->same(*o.ring_)) return false;
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

void Poly::axpy(const Rat& c, const Monomial& m, const Poly& g) {
    if (symchev::is_zero(c) || g.is_zero()) return;
    MonomialOrder ord = ring_->grevlex();
    std::vector<Term> out;
    out.reserve(t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < g.t_.size()) {
        int cm;
        Monomial gm;
        if (j < g.t_.size()) gm = g.t_[j].m * m;
        if (i >= t_.size())
            cm = -1;
        else if (j >= g.t_.size())
            cm = 1;
        else
            cm = ord.compare(t_[i].m, gm);
        if (cm > 0)
            out.push_back(std::move(t_[i++]));
        else if (cm < 0) {
            out.push_back({std::move(gm), c * g.t_[j].c});
            ++j;
        } else {
            Rat s = t_[i].c + c * g.t_[j].c;
            if (!symchev::is_zero(s)) out.push_back({std::move(t_[i].m), std::move(s)});
            ++i, ++j;
        }
    }
    t_ = std::move(out);
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw std::out_of_range("Poly::derivative: bad variable index");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
        if (t.m.e[var] == 0) continue;
        Term d;
        d.c = t.c * t.m.e[var];
        d.m = t.m;
        d.m.e[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));  // order can change between graded pieces
}

Poly Poly::substitute(const std::vector<Poly>& images, const RingPtr& target) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw std::invalid_argument("Poly::substitute: image count mismatch");
    for (const auto& im : images)
        if (!im.ring()->same(*target)) throw std::invalid_argument("Poly::substitute: image outside target ring");
    Poly acc(target);
    for (const auto& t : t_) {
        Poly prod = Poly::constant(target, t.c);
        for (int v = 0; v < ring_->nvars(); ++v)
            if (t.m.e[v]) prod = prod * images[v].pow(t.m.e[v]);
        acc = acc + prod;
    }
    return acc;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.total_degree());
    return d;
}

long Poly::weighted_degree() const {
    long d = -1;
    for (const auto& t : t_) d = std::max(d, t.m.weighted_degree(ring_->weights()));
    return d;
}

bool Poly::is_homogeneous(long* wdeg) const {
    if (t_.empty()) {
        if (wdeg) *wdeg = 0;
        return true;
    }
    long d = t_[0].m.weighted_degree(ring_->weights());
    for (const auto& t : t_)
        if (t.m.weighted_degree(ring_->weights()) != d) return false;
    if (wdeg) *wdeg = d;
    return true;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
    if (t_.empty()) throw std::domain_error("leading_term of zero polynomial");
    const Term* best = &t_[0];
    for (const auto& t : t_)
        if (order.compare(t.m, best->m) > 0) best = &t;
    return *best;
}

const Term& Poly::leading_term_canonical() const {
    if (t_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return t_[0];
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    return scaled(1 / t_[0].c);
}

Poly Poly::primitive() const {
    if (t_.empty()) return *this;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& t : t_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
    }
    Rat f = rat(den_lcm, num_gcd);  // positive: mpz_gcd is nonnegative
    if (sgn(t_[0].c) < 0) f = -f;
    return scaled(f);
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Rat c = t.c;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (t.m.is_one() || c != 1) {
            os << symchev::to_string(c);
            printed_coeff = true;
        }
        bool any_var = false;
        for (int v = 0; v < ring_->nvars(); ++v) {
            if (!t.m.e[v]) continue;
            if (printed_coeff || any_var) os << "*";
            os << ring_->var(v);
            if (t.m.e[v] > 1) os << "^" << t.m.e[v];
            any_var = true;
        }
    }
    return os.str();
}

void Poly::feed_hash(Fnv1a& f) const {
    f.feed(to_string());
    f.feed(std::uint64_t(t_.size()));
}

}  // namespace symchev
