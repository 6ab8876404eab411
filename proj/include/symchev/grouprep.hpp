#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symchev/groebner.hpp"
#include "symchev/linalg.hpp"
#include "symchev/poly.hpp"

namespace symchev {

// Torus of rank r acting diagonally with integer weights; row k holds the
// character of the k-th one-parameter factor on each coordinate.
struct TorusSpec {
    ZMatrix weights;  // r x n
};

// Lie algebra action given by generator matrices on V.
struct LieSpec {
    std::vector<QMatrix> gens;       // n x n
    std::vector<std::string> names;  // optional, parallel to gens
};

// Finite group given by invertible generator matrices on V.
struct FiniteSpec {
    std::vector<QMatrix> gens;
    int order_cap = 10000;
};

using GroupSpec = std::variant<TorusSpec, LieSpec, FiniteSpec>;

struct Representation {
    GroupSpec group;
    int dim = 0;
    std::vector<std::string> var_names;  // coordinates on V

    static Representation make(GroupSpec g, std::vector<std::string> var_names);
};

// V + V* with coordinates x_1..x_n, y_1..y_n and the contragredient action
// on the dual block: -A^T for Lie generators, (g^{-1})^T for group elements,
// negated weights for tori. Pairing convention: omega(v+phi, v'+phi') =
// phi(v') - phi'(v), which makes {x_i, y_j} = delta_ij.
struct SymplecticDouble {
    Representation base;
    RingPtr ring;  // 2n variables

    int n() const { return base.dim; }
    // Dual weights appended for the torus case.
    ZMatrix double_weights() const;
    // Block diagonal action matrices diag(A, -A^T) of the Lie generators.
    std::vector<QMatrix> lie_double_matrices() const;
    // Block diagonal diag(g, (g^{-1})^T) per finite generator.
    std::vector<QMatrix> finite_double_matrices() const;
};

SymplecticDouble symplectic_double(Representation rep);

// One quadric per torus weight row / Lie generator: mu^A = sum_i y_i (A x)_i.
// Finite groups contribute none (the moment map vanishes identically).
std::vector<Poly> moment_generators(const SymplecticDouble& d);

// Z/m-grading of gl_n from conjugation by a diagonal matrix of m-th roots of
// unity with the given exponents; handled combinatorially so no roots of
// unity ever appear as numbers. g_i is spanned by E_{jk} with d_j - d_k = i.
struct ThetaGrading {
    int n = 0, m = 0;
    std::vector<int> exponents;               // length n, values mod m
    std::vector<std::vector<std::pair<int, int>>> piece_basis;  // per residue i: (j,k) of E_jk
    int dim_piece(int i) const { return static_cast<int>(piece_basis[((i % m) + m) % m].size()); }
};

ThetaGrading theta_grading(int n, int m, std::vector<int> exponents);

// The theta-representation data: g_0 acting on g_1 by commutator, with
// matrices written in the elementary-matrix basis of g_1; g_{-1} is
// identified with g_1^* via the trace pairing, so the double of the returned
// representation is g_1 + g_{-1}.
struct ThetaRepresentation {
    ThetaGrading grading;
    std::vector<std::pair<int, int>> g0_basis;  // (j,k) of E_jk spanning g_0
    std::vector<std::pair<int, int>> g1_basis;
    Representation rep;  // LieSpec on g_1
};

ThetaRepresentation theta_representation(int n, int m, std::vector<int> exponents);

// Closure of the generators under multiplication; identity first, then
// breadth-first products in generator order. Throws if the cap is exceeded.
std::vector<QMatrix> finite_group_elements(const FiniteSpec& g);

// Annihilator of g.c inside V*, valid for stable inputs (the caller asserts
// stability; U = 0). Errors unless its dimension equals dim c.
std::vector<std::vector<Rat>> dual_cartan(const SymplecticDouble& d,
                                          const std::vector<std::vector<Rat>>& c_basis, bool assert_stable);

// Weyl action on c + c_dual: explicit matrices, or the combinatorial model
// of a cyclic group acting diagonally with the given character exponents
// (used where a faithful rational matrix model does not exist).
struct CyclicDiagonalAction {
    int order = 0;
    std::vector<int> weights;  // length 2k, exponents mod order
};

struct WeylAction {
    std::vector<QMatrix> matrices;  // 2k x 2k, on (s, t) coordinates
    std::optional<CyclicDiagonalAction> cyclic;

    bool is_cyclic() const { return cyclic.has_value(); }
};

// Cartan data with the dual basis renormalized so that the pairing matrix
// <c_a, cdual_b> is the identity; Weyl matrices are conjugated accordingly.
struct CartanData {
    std::vector<std::vector<Rat>> c_basis;      // rows: vectors in V
    std::vector<std::vector<Rat>> cdual_basis;  // rows: vectors in V*, dual-normalized
    WeylAction weyl;
    RingPtr st_ring;  // s_1..s_k, t_1..t_k
    std::string label;

    int rank() const { return static_cast<int>(c_basis.size()); }
};

CartanData make_cartan_data(std::vector<std::vector<Rat>> c_basis, std::vector<std::vector<Rat>> cdual_basis,
                            WeylAction weyl, std::string label = {});

// Symplectic-form check on (s,t) coordinates: W^T J W = J with J the
// standard pairing. Used to validate scenario Weyl matrices.
bool preserves_standard_symplectic_form(const QMatrix& w);

// Restriction to c + c_dual: substitute x := sum_a s_a c_a and
// y := sum_b t_b cdual_b into a polynomial on the double; lands in cd's
// (s, t) ring. A ring homomorphism, degree preserving.
Poly cartan_restrict(const Poly& p_on_double, const CartanData& cd);

// Apply one Weyl generator to a polynomial on the (s, t) ring. For cyclic
// actions this is the exact monomial character filter (w acts on the
// monomial by a power of the primitive root; a polynomial is fixed iff all
// its monomials have character zero), exposed via the invariance test below.
bool weyl_fixes(const CartanData& cd, const Poly& p_on_st);

// Commutator [a, b].
QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Coordinates of m in the span of basis, if it lies there.
std::optional<std::vector<Rat>> in_span(const std::vector<QMatrix>& basis, const QMatrix& m);

}  // namespace symchev
