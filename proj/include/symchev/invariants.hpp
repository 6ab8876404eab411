#pragma once

#include <vector>

#include "symchev/grouprep.hpp"
#include "symchev/polyspan.hpp"

namespace symchev {

// Degree-by-degree invariant spaces plus flagged minimal algebra generators.
// Every listed polynomial is exactly invariant; constructors verify this
// against the defining data before returning.
struct InvariantBasis {
    RingPtr ring;
    int degree_bound = 0;
    std::vector<std::vector<Poly>> by_degree;  // index d = 0..degree_bound
    std::vector<Poly> generators;              // ascending degree, echelon-normalized
    std::vector<int> generator_degrees;
    std::string source;

    std::vector<Poly> generators_of_degree(int d) const;
    int dim_at(int d) const { return d <= degree_bound ? static_cast<int>(by_degree[d].size()) : -1; }
};

struct MolienSeries {
    std::vector<Int> coeff;  // truncated power series, index = degree
};

// p composed with the linear map g: substitutes z_i -> (g z)_i.
Poly matrix_substitute(const QMatrix& g, const Poly& p);

// (1/|G|) sum over elements of p o g. Fixes invariants, kills the rest of
// the isotypic decomposition.
Poly reynolds(const std::vector<QMatrix>& elements, const Poly& p);

// Exact truncation of (1/|G|) sum_g 1/det(1 - t g). Coefficients are checked
// to be nonnegative integers.
MolienSeries molien(const std::vector<QMatrix>& elements, int truncation);

// Per-degree invariant bases by Reynolds averaging + rank selection. Aborts
// (std::logic_error) if a degree dimension disagrees with the Molien series.
InvariantBasis finite_invariant_basis(const std::vector<QMatrix>& elements, const RingPtr& ring,
                                      int degree_bound, Exec exec = default_exec());

// Counting series and invariants of a cyclic group acting diagonally with
// character exponents mod order (the rational stand-in for diag(zeta^w)).
std::vector<Int> cyclic_diagonal_dimensions(const CyclicDiagonalAction& a, int truncation);
InvariantBasis cyclic_diagonal_invariant_basis(const CyclicDiagonalAction& a, const RingPtr& ring,
                                               int degree_bound);

// ---------------------------------------------------------------------------
// Lattice side: Hilbert bases of solution monoids {u >= 0 : A u = 0, and
// congruence rows B u = 0 mod m}. Gordan-style completion, one row at a time.

struct MonoidProblem {
    int nvars = 0;
    std::vector<std::vector<Int>> eq_rows;
    std::vector<std::pair<std::vector<Int>, Int>> congruences;  // (row, modulus)
};

std::vector<std::vector<Int>> monoid_hilbert_basis(const MonoidProblem& prob, std::size_t size_cap = 200000);

// Monomial generators (= Hilbert basis of the zero-weight monoid) plus
// per-degree zero-weight monomial spaces.
InvariantBasis torus_invariant_basis(const ZMatrix& double_weights, const RingPtr& ring, int degree_bound);

// All exponent vectors of total degree d with A u = 0 (branch-and-bound).
std::vector<Monomial> zero_weight_monomials(const ZMatrix& weights, int nvars, int degree);

// ---------------------------------------------------------------------------
// Connected groups: degree-truncated kernels of the action derivations
// D_A = sum_i (A z)_i d/dz_i. Diagonal generators become exact weight
// filters; the rest are imposed by iterated kernel restriction per graded
// block. Blocks are independent and run in parallel under Exec::Omp.

struct LieInvariantOptions {
    int degree_bound = 2;
    Exec exec = default_exec();
    std::size_t block_cap = 2'000'000;  // largest tolerated single block
};

InvariantBasis lie_invariant_basis(const std::vector<QMatrix>& action, const RingPtr& ring,
                                   const LieInvariantOptions& opt);

// An explicitly supplied generator list (e.g. classical invariants from a
// scenario file); invariance is verified exactly against the action.
InvariantBasis explicit_invariant_basis(std::vector<Poly> gens, const std::vector<QMatrix>& lie_action,
                                        const std::vector<QMatrix>& finite_elements, const ZMatrix* torus_weights,
                                        int degree_bound);

// Exact invariance predicates.
bool is_invariant_under_derivation(const QMatrix& action, const Poly& p);
bool is_invariant_under_substitution(const QMatrix& g, const Poly& p);
Poly apply_derivation(const QMatrix& action, const Poly& p);

// Flag minimal generators: a degree-d invariant is new iff independent of
// products of lower-degree generators. Shared by all constructions.
void flag_minimal_generators(InvariantBasis& basis, Exec exec);

}  // namespace symchev
