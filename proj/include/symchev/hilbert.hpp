#pragma once

#include "symchev/groebner.hpp"

namespace symchev {

// Hilbert series of a graded quotient ring/i as numerator / prod (1 - t^d).
struct HilbertSeriesRat {
    std::vector<Int> numerator;      // coefficient of t^k at index k
    std::vector<int> denom_weights;  // one factor (1 - t^d) per entry

    // Power series coefficients through degree cap; throws std::logic_error
    // if any coefficient comes out negative.
    std::vector<Int> expand(int cap) const;
    int pole_order_at_one() const;
    std::string to_string() const;
};

// Requires i homogeneous with respect to the ring grading. Computed from the
// leading-term ideal by pivot splitting; independent of the monomial order.
HilbertSeriesRat hilbert_series(const Ideal& i, const Budget& budget = {}, GbCache* cache = nullptr);
HilbertSeriesRat hilbert_series(const Ideal& i, const MonomialOrder& order, const Budget& budget = {},
                                GbCache* cache = nullptr);

// Numerator for an explicit monomial ideal (exposed for tests).
std::vector<Int> hilbert_numerator(std::vector<Monomial> gens, const std::vector<int>& weights);

// Krull dimension of ring/i (maximal independent variable sets modulo the
// leading-term ideal). Throws std::domain_error on the unit ideal.
int krull_dimension(const Ideal& i, const Budget& budget = {}, GbCache* cache = nullptr);

}  // namespace symchev
