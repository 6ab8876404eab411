#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "symchev/cache.hpp"
#include "symchev/hilbert.hpp"
#include "symchev/polyspan.hpp"

using namespace symchev;

namespace {

Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Poly> gens;
    for (const auto& t : texts) gens.push_back(parse_poly(t, ring));
    return Ideal::make(ring, std::move(gens));
}

// Brute-force membership for homogeneous ideals: p of degree d lies in I iff
// it lies in the span of { m * g : deg(m g) = d }.
bool homogeneous_member_oracle(const Poly& p, const Ideal& i) {
    if (p.is_zero()) return true;
    long d = 0;
    REQUIRE(p.is_homogeneous(&d));
    std::vector<Poly> slice;
    for (const auto& g : i.gens) {
        long gd = g.weighted_degree();
        if (gd > d) continue;
        if (gd == d) {
            slice.push_back(g);
            continue;
        }
        for (const auto& m : monomials_of_degree(i.ring, static_cast<int>(d - gd)))
            slice.push_back(g.mul_term(m, Rat(1)));
    }
    return echelon_span(i.ring, slice).contains(p);
}

Poly random_homogeneous(const RingPtr& ring, std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(ring, degree)) {
        int v = c(rng);
        if (v) terms.push_back({m, Rat(v)});
    }
    return Poly::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("cuspidal cubic elimination") {
    auto r = make_ring({"t", "x", "y"});
    Ideal i = ideal_of(r, {"x - t^2", "y - t^3"});
    GroebnerBasis gb = buchberger(i, r->lex());
    Poly rel = parse_poly("y^2 - x^3", r);
    bool found = false;
    for (const auto& g : gb.basis)
        if (g == rel || g == -rel) found = true;
    CHECK(found);
    CHECK(verify_all_spolys(gb));

    Ideal elim = eliminate(i, 1);
    REQUIRE(elim.gens.size() == 1);
    CHECK(elim.gens[0].to_string() == "x^3 - y^2");
}

TEST_CASE("reduced basis on simple ideals") {
    auto r = make_ring({"x", "y"});
    GroebnerBasis gb1 = buchberger(ideal_of(r, {"x", "y"}), r->grevlex());
    REQUIRE(gb1.basis.size() == 2);
    CHECK(gb1.basis[0].to_string() == "y");
    CHECK(gb1.basis[1].to_string() == "x");

    GroebnerBasis gb2 = buchberger(ideal_of(r, {"x^2 - 1", "x - 1"}), r->grevlex());
    REQUIRE(gb2.basis.size() == 1);
    CHECK(gb2.basis[0].to_string() == "x - 1");
}

TEST_CASE("normal form postconditions") {
    auto r = make_ring({"x", "y"});
    Ideal i = ideal_of(r, {"x^2 - y"});
    GroebnerBasis gb = buchberger(i, r->grevlex());

    CHECK(normal_form(parse_poly("x^2 - y", r) * parse_poly("x + y", r), gb).is_zero());
    CHECK(normal_form(Poly::constant(r, Rat(1)), gb) == Poly::constant(r, Rat(1)));
    CHECK(normal_form(parse_poly("x^3", r), gb) == parse_poly("x*y", r));

    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        Poly p = random_homogeneous(r, rng, 3) + random_homogeneous(r, rng, 2);
        Poly nf = normal_form(p, gb);
        CHECK(normal_form(nf, gb) == nf);  // idempotence
        // complete remainder: no term divisible by a leading monomial
        for (const auto& term : nf.terms())
            for (const auto& lt : gb.leading_monomials()) CHECK(!lt.divides(term.m));
    }
}

TEST_CASE("elimination examples") {
    auto r = make_ring({"t", "x"});
    Ideal i = ideal_of(r, {"t*x - 1"});
    CHECK(eliminate(i, 1).gens.empty());

    auto r3 = make_ring({"t", "x", "y"});
    Ideal i3 = ideal_of(r3, {"t - x", "t - y"});
    Ideal e3 = eliminate(i3, 1);
    REQUIRE(e3.gens.size() == 1);
    CHECK(e3.gens[0].to_string() == "x - y");
}

TEST_CASE("membership oracle equivalence on random homogeneous ideals") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> ngen(1, 3), gdeg(1, 3), pdeg(1, 3), pick(0, 2);
    auto r = make_ring({"x", "y", "z"});
    int checked = 0;
    for (int trial = 0; trial < 120 && checked < 100; ++trial) {
        std::vector<Poly> gens;
        int k = ngen(rng);
        for (int g = 0; g < k; ++g) {
            Poly p = random_homogeneous(r, rng, gdeg(rng));
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        Ideal i = Ideal::make(r, gens);
        GroebnerBasis gb = buchberger(i, r->grevlex());

        // half the probes are members by construction
        Poly probe;
        if (trial % 2 == 0) {
            Poly m = random_homogeneous(r, rng, pdeg(rng));
            probe = gens[static_cast<std::size_t>(pick(rng)) % gens.size()] * m;
        } else {
            probe = random_homogeneous(r, rng, pdeg(rng));
        }
        if (probe.is_zero()) continue;
        CHECK(ideal_member(probe, gb) == homogeneous_member_oracle(probe, i));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("radical membership") {
    auto r = make_ring({"x", "y"});
    {
        RadicalVerdict v = radical_member(parse_poly("x", r), ideal_of(r, {"x^2"}));
        CHECK(v.in_radical);
        CHECK(v.exponent == 2);
    }
    {
        RadicalVerdict v = radical_member(parse_poly("x", r), ideal_of(r, {"y"}));
        CHECK(!v.in_radical);
    }
    {
        // minimal exponent of x+y modulo (x^2, y^2) is 3: brute-force check
        Ideal i = ideal_of(r, {"x^2", "y^2"});
        GroebnerBasis gb = buchberger(i, r->grevlex());
        Poly p = parse_poly("x + y", r);
        int smallest = 0;
        for (int k = 1; k <= 4; ++k)
            if (normal_form(p.pow(k), gb).is_zero()) {
                smallest = k;
                break;
            }
        CHECK(smallest == 3);
        RadicalVerdict v = radical_member(p, i);
        CHECK(v.in_radical);
        CHECK(v.exponent == smallest);
    }
    {
        // powers beyond the cap fall through to Rabinowitsch
        auto r1 = make_ring({"x"});
        RadicalVerdict v = radical_member(parse_poly("x", r1), ideal_of(r1, {"x^6"}), 4);
        CHECK(v.in_radical);
        CHECK(!v.exponent.has_value());
        CHECK(v.via_rabinowitsch);
    }
}

TEST_CASE("hilbert series") {
    auto r = make_ring({"x", "y"});
    {
        HilbertSeriesRat hs = hilbert_series(ideal_of(r, {"x*y"}));
        auto c = hs.expand(6);
        CHECK(c[0] == 1);
        for (int d = 1; d <= 6; ++d) CHECK(c[d] == 2);
        CHECK(hs.pole_order_at_one() == 1);
    }
    {
        auto r3 = make_ring({"x", "y", "z"});
        HilbertSeriesRat hs = hilbert_series(Ideal::make(r3, {}));
        auto c = hs.expand(5);
        for (int d = 0; d <= 5; ++d) CHECK(c[d] == (d + 1) * (d + 2) / 2);
        CHECK(hs.pole_order_at_one() == 3);
    }
    {
        // one relation of weighted degree 4 among generators of degree 2
        auto rw = make_ring({"X", "Y", "Z"}, {2, 2, 2});
        HilbertSeriesRat hs = hilbert_series(ideal_of(rw, {"X*Y - Z^2"}));
        CHECK(hs.numerator == std::vector<Int>{1, 0, 0, 0, -1});
        CHECK(hs.denom_weights == std::vector<int>{2, 2, 2});
        auto c = hs.expand(8);
        CHECK(c[0] == 1);
        CHECK(c[1] == 0);
        CHECK(c[2] == 3);
        CHECK(c[4] == 5);
        CHECK(c[6] == 7);
    }
    CHECK_THROWS(hilbert_series(ideal_of(r, {"x^2 - y"})));  // non-homogeneous
}

TEST_CASE("hilbert series is order independent") {
    std::mt19937 rng(2718);
    auto r = make_ring({"x", "y", "z"});
    std::uniform_int_distribution<int> gdeg(1, 3), ngen(1, 3);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 20; ++trial) {
        std::vector<Poly> gens;
        for (int g = 0; g < ngen(rng); ++g) {
            Poly p = random_homogeneous(r, rng, gdeg(rng));
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        Ideal i = Ideal::make(r, gens);
        HilbertSeriesRat a = hilbert_series(i, r->grevlex());
        HilbertSeriesRat b = hilbert_series(i, r->lex());
        CHECK(a.expand(10) == b.expand(10));
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("krull dimension") {
    auto r2 = make_ring({"x", "y"});
    CHECK(krull_dimension(Ideal::make(r2, {})) == 2);
    CHECK(krull_dimension(ideal_of(r2, {"x*y"})) == 1);
    CHECK_THROWS_AS(krull_dimension(ideal_of(r2, {"x", "x - 1"})), std::domain_error);

    // pole order of the series equals the dimension for homogeneous ideals
    std::mt19937 rng(555);
    auto r3 = make_ring({"x", "y", "z"});
    std::uniform_int_distribution<int> gdeg(1, 3), ngen(1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Poly> gens;
        for (int g = 0; g < ngen(rng); ++g) {
            Poly p = random_homogeneous(r3, rng, gdeg(rng));
            if (!p.is_zero()) gens.push_back(p);
        }
        Ideal i = Ideal::make(r3, gens);
        GroebnerBasis gb = buchberger(i, r3->grevlex());
        if (gb.contains_one()) continue;
        CHECK(krull_dimension(i) == hilbert_series(i).pole_order_at_one());
    }
}

TEST_CASE("subalgebra relations") {
    auto r = make_ring({"x", "y"});
    {
        // Veronese: x^2, xy, y^2 satisfy T1 T3 = T2^2
        Ideal rel = subalgebra_relations(Ideal::make(r, {}),
                                         {parse_poly("x^2", r), parse_poly("x*y", r), parse_poly("y^2", r)}, {});
        REQUIRE(rel.gens.size() == 1);
        CHECK(rel.gens[0].to_string() == "T2^2 - T1*T3");
        CHECK(rel.ring->weights() == std::vector<int>{2, 2, 2});
    }
    {
        Ideal rel = subalgebra_relations(ideal_of(r, {"x"}), {parse_poly("x", r)}, {});
        REQUIRE(rel.gens.size() == 1);
        CHECK(rel.gens[0].to_string() == "T1");
    }
}

TEST_CASE("budget errors are reported, never wrong output") {
    auto r = make_ring({"x", "y", "z"});
    // reducing the second seed generator against the first already costs a step
    Ideal i = ideal_of(r, {"x", "x + y"});
    Budget tiny{.max_steps = 0, .max_seconds = 300.0};
    CHECK_THROWS_AS(buchberger(i, r->grevlex(), tiny), BudgetError);

    Ideal bigger = ideal_of(r, {"x^3 - y*z + x*y", "y^3 - x*z", "z^3 - x*y + y*z"});
    Budget ample{.max_steps = 1'000'000, .max_seconds = 300.0};
    CHECK(verify_all_spolys(buchberger(bigger, r->grevlex(), ample)));
}

TEST_CASE("cache round trip is bit identical") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "symchev-test-cache";
    std::filesystem::remove_all(dir);
    GbCache cache(dir);
    auto r = make_ring({"t", "x", "y"});
    Ideal i = ideal_of(r, {"x - t^2", "y - t^3"});
    GroebnerBasis cold = buchberger(i, r->lex(), {}, &cache);
    CHECK(cache.misses() == 1);
    GroebnerBasis warm = buchberger(i, r->lex(), {}, &cache);
    CHECK(cache.hits() == 1);
    REQUIRE(cold.basis.size() == warm.basis.size());
    for (std::size_t k = 0; k < cold.basis.size(); ++k) CHECK(cold.basis[k] == warm.basis[k]);

    // a recomputation in a fresh directory produces a bit-identical file
    std::filesystem::path dir2 = std::filesystem::temp_directory_path() / "symchev-test-cache2";
    std::filesystem::remove_all(dir2);
    GbCache cache2(dir2);
    buchberger(i, r->lex(), {}, &cache2);
    auto read_file = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    std::string f1, f2;
    for (const auto& e : std::filesystem::directory_iterator(dir)) f1 = read_file(e.path());
    for (const auto& e : std::filesystem::directory_iterator(dir2)) f2 = read_file(e.path());
    CHECK(!f1.empty());
    CHECK(f1 == f2);
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("all S-polynomials of computed bases reduce to zero") {
    std::mt19937 rng(909);
    auto r = make_ring({"x", "y", "z"});
    std::uniform_int_distribution<int> gdeg(1, 3), ngen(2, 3);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Poly> gens;
        for (int g = 0; g < ngen(rng); ++g) {
            Poly p = random_homogeneous(r, rng, gdeg(rng));
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(Ideal::make(r, gens), r->grevlex());
        CHECK(verify_all_spolys(gb));
    }
}
