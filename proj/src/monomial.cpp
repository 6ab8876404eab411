#include "symchev/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace symchev {

namespace {

int cmp_lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi, const std::vector<int>& w) {
    long da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += static_cast<long>(a.e[i]) * w[i];
        db += static_cast<long>(b.e[i]) * w[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse lex tie-break: last difference, smaller exponent wins
    for (int i = hi - 1; i >= lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

int cmp_range(const Monomial& a, const Monomial& b, int lo, int hi, OrderKind kind, const std::vector<int>& w) {
    return kind == OrderKind::Lex ? cmp_lex_range(a, b, lo, hi) : cmp_grevlex_range(a, b, lo, hi, w);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    if (b.nvars() != n) throw std::invalid_argument("MonomialOrder::compare: variable count mismatch");
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex_range(a, b, 0, n);
        case OrderKind::GrevLex:
            return cmp_grevlex_range(a, b, 0, n, weights);
        case OrderKind::Block: {
            int c = cmp_range(a, b, 0, block_split, block_first, weights);
            if (c) return c;
            return cmp_range(a, b, block_split, n, block_second, weights);
        }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    std::ostringstream os;
    switch (kind) {
        case OrderKind::Lex:
            os << "lex";
            break;
        case OrderKind::GrevLex:
            os << "grevlex";
            break;
        case OrderKind::Block:
            os << "block(" << block_split << "," << (block_first == OrderKind::Lex ? "lex" : "grevlex") << ","
               << (block_second == OrderKind::Lex ? "lex" : "grevlex") << ")";
            break;
    }
    os << "/w";
    for (int w : weights) os << ":" << w;
    return os.str();
}

MonomialOrder lex_order(int nvars) {
    MonomialOrder o;
    o.kind = OrderKind::Lex;
    o.weights.assign(nvars, 1);
    return o;
}

MonomialOrder grevlex_order(std::vector<int> weights) {
    MonomialOrder o;
    o.kind = OrderKind::GrevLex;
    o.weights = std::move(weights);
    return o;
}

MonomialOrder block_order(std::vector<int> weights, int split, OrderKind first) {
    const int n = static_cast<int>(weights.size());
    if (split <= 0 || split >= n) throw std::invalid_argument("block_order: split must satisfy 0 < k < nvars");
    MonomialOrder o;
    o.kind = OrderKind::Block;
    o.weights = std::move(weights);
    o.block_split = split;
    o.block_first = first;
    return o;
}

}  // namespace symchev
