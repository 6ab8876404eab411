#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symchev/ring.hpp"

namespace symchev {

struct Term {
    Monomial m;
    Rat c;
};

// Multivariate polynomial over Q. Terms are kept merged, nonzero and sorted
// descending under the ring's graded-reverse-lex order; other orders re-sort
// on demand (leading_term) or inside the Groebner engine.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rat& c);
    static Poly variable(const RingPtr& ring, int index);
    static Poly monomial(RingPtr ring, Monomial m, const Rat& c);
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);  // normalizes

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    int nterms() const { return static_cast<int>(t_.size()); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    Poly mul_term(const Monomial& m, const Rat& c) const;
    Poly pow(int k) const;
    bool operator==(const Poly& o) const;

    // p += c * x^m * g, single sorted merge; the reduction hot path.
    void axpy(const Rat& c, const Monomial& m, const Poly& g);

    Poly derivative(int var) const;

    // Ring homomorphism determined by variable images (all in target ring).
    Poly substitute(const std::vector<Poly>& images, const RingPtr& target) const;

    int total_degree() const;  // max over terms; -1 for zero
    long weighted_degree() const;
    bool is_homogeneous(long* wdeg = nullptr) const;

    const Term& leading_term(const MonomialOrder& order) const;  // throws on zero
    const Term& leading_term_canonical() const;                  // ring grevlex: front()

    // Scale so the canonical leading coefficient is 1.
    Poly monic() const;
    // Integer coefficients, content 1, positive canonical leading coefficient.
    Poly primitive() const;

    std::string to_string() const;
    void feed_hash(Fnv1a& f) const;

  private:
    RingPtr ring_;
    std::vector<Term> t_;

    void normalize();  // sort desc canonical + merge + drop zeros
    friend Poly parse_poly(const std::string&, const RingPtr&);
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

void require_same_ring(const Poly& a, const Poly& b, const char* what);

}  // namespace symchev
