#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symchev/parse.hpp"
#include "symchev/poly.hpp"

namespace symchev {

struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;  // nonzero, same ring

    static Ideal make(RingPtr ring, std::vector<Poly> gens);
    bool is_zero_ideal() const { return gens.empty(); }
    // Canonical text used for fingerprints: sorted printed generators.
    std::string canonical_key() const;
};

// Explicit resource limits. Exceeding them raises BudgetError; results are
// never silently truncated.
struct Budget {
    std::uint64_t max_steps = 1'000'000;  // reduction steps
    double max_seconds = 300.0;
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Shared step/wall-clock meter for one computation.
class BudgetClock {
  public:
    explicit BudgetClock(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void tick(std::uint64_t n = 1) {
        steps_ += n;
        if (steps_ > budget_.max_steps)
            throw BudgetError("step budget exceeded (" + std::to_string(budget_.max_steps) + " reductions)");
        if ((steps_ & 0xff) == 0) check_clock();
    }
    void check_clock() const {
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (sec > budget_.max_seconds)
            throw BudgetError("time budget exceeded (" + std::to_string(budget_.max_seconds) + " s)");
    }
    std::uint64_t steps() const { return steps_; }

  private:
    Budget budget_;
    std::uint64_t steps_ = 0;
    std::chrono::steady_clock::time_point start_;
};

class GbCache;

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Poly> basis;  // reduced: monic, auto-reduced, ascending by leading monomial
    std::string fingerprint;  // hex hash of (ring, order, canonical generators)

    bool contains_one() const;
    std::vector<Monomial> leading_monomials() const;
};

// Reduced Groebner basis, deterministic for fixed input: normal pair
// selection (minimal weighted lcm degree, then lowest indices) with both
// Buchberger criteria via Gebauer-Moeller updates. After reduction the basis
// is re-checked: every surviving S-polynomial must reduce to zero.
GroebnerBasis buchberger(const Ideal& i, const MonomialOrder& order, const Budget& budget = {},
                         GbCache* cache = nullptr);

// Complete remainder: no term of the result is divisible by any basis
// leading monomial, and p - result lies in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);
Poly normal_form(const Poly& p, const GroebnerBasis& gb, BudgetClock& clock);

inline bool ideal_member(const Poly& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

// Generators of i ∩ Q[last variables] as an ideal of the suffix ring.
Ideal eliminate(const Ideal& i, int first_k, const Budget& budget = {}, GbCache* cache = nullptr);

struct RadicalVerdict {
    bool in_radical = false;
    std::optional<int> exponent;  // smallest verified k <= cap with p^k in ideal
    bool via_rabinowitsch = false;
};

// Tries explicit powers up to cap first (the witness-exponent route), then
// the Rabinowitsch localization check.
RadicalVerdict radical_member(const Poly& p, const Ideal& i, int cap = 4, const Budget& budget = {},
                              GbCache* cache = nullptr);

// Presentation of the subalgebra generated by gens inside ring/i: introduces
// tag variables T_k with weight deg(g_k), forms i + (T_k - g_k), eliminates
// the original variables. Result lives in the tag ring.
Ideal subalgebra_relations(const Ideal& i, const std::vector<Poly>& gens,
                           const std::vector<std::string>& tag_names, const Budget& budget = {},
                           GbCache* cache = nullptr);

// Test helper: re-reduces every S-polynomial pair without any criteria.
bool verify_all_spolys(const GroebnerBasis& gb, const Budget& budget = {});

// Map p into a ring whose variable set contains p's, by name.
Poly lift_to_ring(const Poly& p, const RingPtr& target);

}  // namespace symchev
