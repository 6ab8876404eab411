#pragma once

#include <map>

#include "symchev/linalg.hpp"
#include "symchev/poly.hpp"

namespace symchev {

// Differential forms with polynomial coefficients on Q[z_1..z_n].
struct OneForm {
    RingPtr ring;
    std::vector<Poly> comp;  // sum_q comp[q] dz_q
};

struct TwoForm {
    RingPtr ring;
    std::map<std::pair<int, int>, Poly> comp;  // key (a, b) with a < b: coefficient of dz_a ^ dz_b

    Poly coeff(int a, int b) const;       // signed lookup, zero if absent
    TwoForm graded_piece(int r) const;    // coefficient-degree-r part
    bool is_zero() const;
};

struct ThreeForm {
    RingPtr ring;
    std::map<std::tuple<int, int, int>, Poly> comp;  // a < b < c
    bool is_zero() const;
};

TwoForm exterior_d(const OneForm& f);
ThreeForm exterior_d(const TwoForm& f);

// Euler homotopy potential: for a closed 2-form part with homogeneous
// coefficients of degree r >= 1, returns psi with d psi = part,
//   psi = (1/(r+2)) sum_{a<b} f_ab (z_a dz_b - z_b dz_a).
// Degree-0 parts belong in the constant matrix, not here (contract error).
OneForm poincare_potential(const TwoForm& closed_homogeneous_part);

// Formally varying symplectic form truncated at coefficient degree cap:
// constant skew part (as the matrix of dz_a ^ dz_b pair coefficients) plus
// higher pieces. Closedness is validated degree by degree on construction.
struct FormalTwoForm {
    RingPtr ring;
    int n = 0;
    int degree_cap = 0;   // D: stored coefficient degrees are 0..D
    QMatrix constant;     // skew n x n, entry (a,b), a<b = coefficient of dz_a ^ dz_b
    TwoForm higher;       // pieces of degree 1..D

    static FormalTwoForm make(RingPtr ring, QMatrix constant_skew, TwoForm higher, int degree_cap);
};

struct CoordinateChange {
    std::vector<Poly> xi;     // xi_i = z_i + higher order terms
    int guaranteed_degree = 0;  // pullback equals the input through this coefficient degree
};

// Pullback sum_{a,b} (C/2)_{ab} d xi_a ^ d xi_b as pair coefficients, with C
// the skew constant matrix; truncated at the given coefficient degree.
TwoForm constant_pullback(const RingPtr& ring, const QMatrix& constant_skew, const std::vector<Poly>& xi,
                          int truncate_degree);

// The degree-by-degree recursion: solve for xi^{(m)}, m = 2..D-1, so the
// pullback of the constant form equals omega through coefficient degree
// D - 2. The result is re-verified by exact substitution before returning.
CoordinateChange darboux_normalize(const FormalTwoForm& omega, int degree_cap);

}  // namespace symchev
