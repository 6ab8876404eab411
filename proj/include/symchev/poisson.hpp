#pragma once

#include "symchev/groebner.hpp"
#include "symchev/grouprep.hpp"
#include "symchev/invariants.hpp"

namespace symchev {

// Poisson bracket on a paired ring (first half x, second half y):
//   {f,g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i)
// which realizes {x_i, y_j} = delta_ij and is skew by construction.
Poly poisson_bracket(const Poly& f, const Poly& g);

struct CentralityCheck {
    int invariant_index = 0;
    int moment_index = 0;
    bool zero = false;
};

// {f, mu^A} must vanish identically (not merely modulo the ideal) for every
// invariant f and moment generator mu^A.
std::vector<CentralityCheck> check_invariant_central(const std::vector<Poly>& moment_gens,
                                                     const std::vector<Poly>& invariants);

struct PoissonIdealDegree {
    int degree = 0;
    int ig_dim = 0;  // dimension of (invariants ∩ I) at this degree
    bool all_brackets_reduce_to_zero = true;
};

struct PoissonIdealReport {
    bool holds = true;
    std::vector<PoissonIdealDegree> rows;
};

// Invariant elements of I up to the degree bound (per-degree span
// intersections), bracketed against the invariant generators; every bracket
// must have normal form 0 modulo the moment ideal.
PoissonIdealReport check_poisson_ideal(const InvariantBasis& inv, const Ideal& moment, const GroebnerBasis& gb,
                                       int degree_bound, Exec exec = default_exec());

// restrict{f,g} = {restrict f, restrict g} on c + c_dual, dual-normalized
// bases (the pairing on (s,t) is the standard one after make_cartan_data).
bool bracket_compatibility(const Poly& f, const Poly& g, const CartanData& cd);

struct EquivarianceReport {
    bool applicable = true;
    bool holds = true;
    std::string note;
};

// {mu^{A_i}, mu^{A_j}} = mu^{[A_i, A_j]}, with the structure constants
// recovered from the generator matrices by exact linear algebra; skipped
// with a notice when the generator span is not closed under commutators.
EquivarianceReport moment_equivariance(const SymplecticDouble& d);

}  // namespace symchev
