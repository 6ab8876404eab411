#include <doctest.h>

#include <random>

#include "symchev/parse.hpp"
#include "symchev/polyspan.hpp"

using namespace symchev;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Poly random_poly(const RingPtr& ring, std::mt19937& rng, int max_deg = 3, int terms = 4) {
    std::uniform_int_distribution<int> e(0, max_deg), c(-4, 4);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Term tm;
        tm.m = Monomial(ring->nvars());
        for (int v = 0; v < ring->nvars(); ++v) tm.m.e[v] = static_cast<std::uint16_t>(e(rng) % (max_deg + 1));
        tm.c = Rat(c(rng));
        ts.push_back(tm);
    }
    return Poly::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("basic arithmetic") {
    auto r = xy();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * Poly::zero(r)).is_zero());
    Poly one = Poly::constant(r, Rat(1));
    CHECK((x + one).pow(3) == x * x * x + Rat(3) * x * x + Rat(3) * x + one);
}

TEST_CASE("ring axioms on random triples") {
    auto r = xy();
    std::mt19937 rng(99);
    for (int t = 0; t < 30; ++t) {
        Poly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("derivative") {
    auto r = xy();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    CHECK((x * x * y).derivative(0) == Rat(2) * x * y);
    CHECK((x * x).derivative(1).is_zero());
    Poly p = parse_poly("x^3 + 3*x^2 + 3*x + 1", r);
    CHECK(p.derivative(0) == parse_poly("3*x^2 + 6*x + 3", r));
}

TEST_CASE("Leibniz rule on random pairs") {
    auto r = xy();
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        Poly p = random_poly(r, rng), q = random_poly(r, rng);
        for (int v = 0; v < 2; ++v) CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
    }
}

TEST_CASE("substitution") {
    auto r = xy();
    auto s_ring = make_ring({"s"});
    Poly s = Poly::variable(s_ring, 0);
    Poly xy_prod = Poly::variable(r, 0) * Poly::variable(r, 1);
    CHECK(xy_prod.substitute({s, s}, s_ring) == s * s);

    auto t_ring = make_ring({"t"});
    Poly t2 = Poly::variable(t_ring, 0).pow(2);
    CHECK((Poly::variable(r, 0) - Poly::variable(r, 1)).substitute({t2, t2}, t_ring).is_zero());

    auto uv = make_ring({"u", "v"});
    Poly u = Poly::variable(uv, 0), v = Poly::variable(uv, 1);
    Poly p = parse_poly("x^2 + y", r);
    CHECK(p.substitute({u + v, -(u + v) * (u + v)}, uv).is_zero());

    CHECK_THROWS(p.substitute({u}, uv));  // arity mismatch
}

TEST_CASE("leading terms under orders") {
    auto r = xy();
    MonomialOrder grev = r->grevlex();
    MonomialOrder lx = r->lex();

    Poly p = parse_poly("x^2*y + x*y^2", r);
    CHECK(p.leading_term(grev).m.e == std::vector<std::uint16_t>{2, 1});

    Poly q = parse_poly("x + y^2", r);
    CHECK(q.leading_term(lx).m.e == std::vector<std::uint16_t>{1, 0});
    CHECK(q.leading_term(grev).m.e == std::vector<std::uint16_t>{0, 2});

    CHECK_THROWS_AS(Poly::zero(r).leading_term(grev), std::domain_error);
}

TEST_CASE("order compatibility with multiplication and 1 minimal") {
    auto r3 = make_ring({"x", "y", "z"});
    std::vector<MonomialOrder> orders = {r3->grevlex(), r3->lex(), block_order({1, 1, 1}, 1)};
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(0, 4);
    for (const auto& ord : orders) {
        for (int t = 0; t < 200; ++t) {
            Monomial a(3), b(3), m(3);
            for (int v = 0; v < 3; ++v) {
                a.e[v] = e(rng);
                b.e[v] = e(rng);
                m.e[v] = e(rng);
            }
            int cmp_ab = ord.compare(a, b);
            CHECK(ord.compare(a * m, b * m) == cmp_ab);
            Monomial one(3);
            if (!(a == one)) CHECK(ord.compare(one, a) < 0);
        }
    }
}

TEST_CASE("parser grammar and errors") {
    auto r = xy();
    CHECK(parse_poly("x^2 - 2*x*y + y^2", r) == (Poly::variable(r, 0) - Poly::variable(r, 1)).pow(2));
    CHECK(parse_poly("3/2*x", r) == Poly::variable(r, 0).scaled(rat(3, 2)));
    CHECK_THROWS_AS(parse_poly("x + z", r), ParseError);
    try {
        parse_poly("x + z", r);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_poly("x + ", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ -2", r), ParseError);
    CHECK(parse_poly("(x + y)^2", r) == parse_poly("x^2 + 2*x*y + y^2", r));
    CHECK(parse_poly("-x + 1/2", r) == Poly::constant(r, rat(1, 2)) - Poly::variable(r, 0));
}

TEST_CASE("parse of printed form is the identity") {
    auto r3 = make_ring({"x", "y", "z"});
    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
        Poly p = random_poly(r3, rng, 4, 6);
        CHECK(parse_poly(p.to_string(), r3) == p);
    }
}

TEST_CASE("echelon spans") {
    auto r = xy();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    PolySpan span = echelon_span(r, {x + y, x - y, Rat(2) * x});
    CHECK(span.dim() == 2);
    CHECK(span.contains(y));
    CHECK(!span.contains(x * y));
    CHECK(span.reduce(x * y + x) == x * y);
}

TEST_CASE("monomial enumeration is complete and ordered") {
    auto r3 = make_ring({"x", "y", "z"});
    auto ms = monomials_of_degree(r3, 3);
    CHECK(ms.size() == 10);
    MonomialOrder ord = r3->grevlex();
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ord.compare(ms[i], ms[i + 1]) > 0);
}
