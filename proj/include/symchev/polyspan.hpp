#pragma once

#include <vector>

#include "symchev/linalg.hpp"
#include "symchev/poly.hpp"

namespace symchev {

// Echelonized linear span of polynomials over the monomial basis. Columns
// are ordered by the ring's canonical order, rows reduced by exact RREF, so
// the basis is unique for a given span.
class PolySpan {
  public:
    explicit PolySpan(RingPtr ring) : ring_(std::move(ring)) {}

    const std::vector<Poly>& basis() const { return rows_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduce p against the echelon rows; the remainder is zero iff p lies in
    // the span.
    Poly reduce(Poly p) const;
    bool contains(const Poly& p) const { return reduce(p).is_zero(); }

    // Insert p if independent; returns the reduced new row or zero.
    Poly insert(Poly p);

  private:
    RingPtr ring_;
    std::vector<Poly> rows_;  // monic leading coefficient, strictly decreasing pivots
};

// Batch construction; the parallel path echelonizes via the RREF kernel.
PolySpan echelon_span(RingPtr ring, const std::vector<Poly>& polys, Exec exec = default_exec());

// All monomials of the ring of the given total degree, descending canonical
// order.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree);

}  // namespace symchev
