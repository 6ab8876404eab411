#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symchev/rational.hpp"

namespace symchev {

// Exponent vector. Length always matches the ring's variable count.
struct Monomial {
    std::vector<std::uint16_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int total_degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    long weighted_degree(const std::vector<int>& w) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * w[i];
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    // Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (o.e[i] > r.e[i]) r.e[i] = o.e[i];
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const = default;

    std::uint64_t hash() const {
        Fnv1a f;
        f.feed(e.data(), e.size() * sizeof(std::uint16_t));
        return f.h;
    }
};

enum class OrderKind { Lex, GrevLex, Block };

// A monomial order over a fixed ring. Graded comparisons use the ring's
// variable weights. Block orders put the first `block_split` variables in a
// dominating block, which is what elimination needs.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<int> weights;
    int block_split = 0;
    OrderKind block_first = OrderKind::Lex;      // order inside the eliminated block
    OrderKind block_second = OrderKind::GrevLex; // order on the kept block

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string describe() const;
};

MonomialOrder lex_order(int nvars);
MonomialOrder grevlex_order(std::vector<int> weights);
MonomialOrder block_order(std::vector<int> weights, int split, OrderKind first = OrderKind::Lex);

}  // namespace symchev
