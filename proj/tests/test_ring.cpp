#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "sfq/poly_qt.hpp"
#include "sfq/rat_qt.hpp"

using namespace sfq;

namespace {

PolyQT random_poly(std::mt19937& rng, int max_terms = 4, bool laurent = false) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(laurent ? -2 : 0, 3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    PolyQT p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(ExpQT{expo(rng), expo(rng)}, Zint(coeff(rng)));
    return p;
}

PolyQT random_nonzero_poly(std::mt19937& rng, int max_terms = 4, bool laurent = false) {
    for (;;) {
        PolyQT p = random_poly(rng, max_terms, laurent);
        if (!p.is_zero()) return p;
    }
}

const PolyQT Q = PolyQT::q();
const PolyQT T = PolyQT::t();
const PolyQT ONE = PolyQT::one();

}  // namespace

TEST_CASE("polynomial addition and multiplication on the stated examples") {
    // (1-t)(1+t) = 1 - t^2
    CHECK((ONE - T) * (ONE + T) == ONE - T * T);

    // p + (-p) = 0
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        PolyQT p = random_poly(rng);
        CHECK((p + (-p)).is_zero());
    }

    // (1 - q t^2)(1 - t)^2 = 1 - 2t + t^2 - q t^2 + 2 q t^3 - q t^4
    PolyQT lhs = (ONE - Q * T * T) * (ONE - T) * (ONE - T);
    PolyQT rhs;
    rhs.add_term(ExpQT{0, 0}, 1);
    rhs.add_term(ExpQT{0, 1}, -2);
    rhs.add_term(ExpQT{0, 2}, 1);
    rhs.add_term(ExpQT{1, 2}, -1);
    rhs.add_term(ExpQT{1, 3}, 2);
    rhs.add_term(ExpQT{1, 4}, -1);
    CHECK(lhs == rhs);
}

TEST_CASE("ring axioms hold on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        PolyQT a = random_poly(rng, 4, true);
        PolyQT b = random_poly(rng, 4, true);
        PolyQT c = random_poly(rng, 4, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("exact division recovers factors") {
    CHECK(div_exact(ONE - T * T, ONE - T) == ONE + T);

    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        PolyQT p = random_nonzero_poly(rng, 4, true);
        CHECK(div_exact(p, p).is_one());
    }

    PolyQT a = (ONE - Q * T) * (ONE - T);
    CHECK(div_exact(a, ONE - Q * T) == ONE - T);

    // div_exact(a*b, b) == a on a random suite
    for (int i = 0; i < 60; ++i) {
        PolyQT a2 = random_poly(rng, 4, true);
        PolyQT b2 = random_nonzero_poly(rng, 4, true);
        CHECK(div_exact(a2 * b2, b2) == a2);
    }
}

TEST_CASE("exact division rejects non-factors") {
    CHECK_THROWS_AS(div_exact(ONE, ONE - T), NotDivisible);
    CHECK_THROWS_AS(div_exact(Q * Q + T, Q + T), NotDivisible);
    CHECK_THROWS_AS(div_exact(ONE, PolyQT::zero()), NotDivisible);
    PolyQT two(2);
    CHECK_THROWS_AS(div_exact(ONE + T, two), NotDivisible);
    // monomial divisors always succeed on the Laurent support
    CHECK(div_exact(Q + T, T) == PolyQT::t(-1) * Q + ONE);
}

TEST_CASE("rational canonical form") {
    // q^2 t / (q t^2) -> q/t as a monomial shift
    RatQT r1 = rat_reduce(PolyQT::monomial(1, 2, 1), PolyQT::monomial(1, 1, 2));
    CHECK(r1.den().is_one());
    CHECK(r1.num() == PolyQT::monomial(1, 1, -1));

    // (2 - 2t)/4 -> (1-t)/2
    RatQT r2 = rat_reduce(PolyQT(2) - Zint(2) * T, PolyQT(4));
    CHECK(r2.num() == ONE - T);
    CHECK(r2.den() == PolyQT(2));

    // ((1-t^2) q)/(1-t) -> q(1+t), denominator cleared
    RatQT r3 = rat_reduce((ONE - T * T) * Q, ONE - T);
    CHECK(r3.is_polynomial());
    CHECK(r3.num() == Q * (ONE + T));
    CHECK(r3 == RatQT(Q * (ONE + T)));

    CHECK_THROWS_AS(rat_reduce(ONE, PolyQT::zero()), ZeroDenominator);
}

TEST_CASE("rational equality is an equivalence relation") {
    std::mt19937 rng(17);
    std::vector<RatQT> vals;
    for (int i = 0; i < 12; ++i) {
        PolyQT n = random_poly(rng, 3, true);
        PolyQT d = random_nonzero_poly(rng, 3, true);
        vals.emplace_back(n, d);
        // scaled representative of the same value
        PolyQT s = random_nonzero_poly(rng, 2, true);
        vals.emplace_back(n * s, d * s);
    }
    for (const auto& a : vals) CHECK(a == a);
    for (const auto& a : vals)
        for (const auto& b : vals)
            CHECK((a == b) == (b == a));
    for (const auto& a : vals)
        for (const auto& b : vals)
            for (const auto& c : vals)
                if (a == b && b == c) CHECK(a == c);
    for (std::size_t i = 0; i + 1 < vals.size(); i += 2) CHECK(vals[i] == vals[i + 1]);
}

TEST_CASE("specialization evaluates exactly") {
    RatQT q_id(Q), t_id(T), zero(0);

    CHECK(specialize(Q + T, zero, t_id) == RatQT(T));
    CHECK(specialize(ONE - Q * T, t_id, t_id) == RatQT(ONE - T * T));

    // t^-1 + q under t -> 1/t gives t + q; substituting again returns it
    PolyQT p = PolyQT::t(-1) + Q;
    RatQT t_inv = RatQT(ONE, T);
    RatQT once = specialize(p, q_id, t_inv);
    CHECK(once == RatQT(T + Q));
    RatQT twice = specialize(once, q_id, t_inv);
    CHECK(twice == RatQT(p));

    // identity substitution
    std::mt19937 rng(19);
    for (int i = 0; i < 20; ++i) {
        PolyQT r = random_poly(rng, 4, true);
        CHECK(specialize(r, q_id, t_id) == RatQT(r));
    }

    CHECK_THROWS_AS(specialize(PolyQT::t(-1), q_id, zero), PoleAtZero);
}

TEST_CASE("specialization is a ring morphism") {
    std::mt19937 rng(23);
    RatQT qv(ONE - T, PolyQT(3));
    RatQT tv(Q + PolyQT(2), ONE + Q);
    for (int i = 0; i < 25; ++i) {
        PolyQT a = random_poly(rng, 3, false);
        PolyQT b = random_poly(rng, 3, false);
        CHECK(specialize(a * b, qv, tv) == specialize(a, qv, tv) * specialize(b, qv, tv));
        CHECK(specialize(a + b, qv, tv) == specialize(a, qv, tv) + specialize(b, qv, tv));
    }
}

TEST_CASE("limit at q=0 handles cancelling powers") {
    // (q - q t)/q -> 1 - t
    RatQT r(Q - Q * T, Q);
    CHECK(limit_q_to_zero(r) == RatQT(ONE - T));
    // q/(1+q) -> 0
    CHECK(limit_q_to_zero(RatQT(Q, ONE + Q)) == RatQT(0));
    // 1/q has a pole
    CHECK_THROWS_AS(limit_q_to_zero(RatQT(ONE, Q)), PoleAtZero);
}

TEST_CASE("canonical strings print and parse round trip") {
    PolyQT p = Q * T * T + Zint(2) * T - ONE;
    CHECK(p.str() == "q*t^2 + 2*t - 1");
    CHECK(parse_poly("q*t^2 + 2*t - 1") == p);
    CHECK(parse_poly("q*t^2+2*t-1") == p);
    CHECK(parse_poly("  q * t ^ 2 + 2 * t - 1 ") == p);

    CHECK(PolyQT::zero().str() == "0");
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("1") == ONE);
    CHECK((-ONE).str() == "-1");

    PolyQT laurent = PolyQT::t(-1) + Q;
    CHECK(laurent.str() == "q + t^-1");
    CHECK(parse_poly("q + t^-1") == laurent);

    std::mt19937 rng(29);
    for (int i = 0; i < 50; ++i) {
        PolyQT r = random_poly(rng, 5, true);
        CHECK(parse_poly(r.str()) == r);
    }

    CHECK_THROWS_AS(parse_poly("q +"), ParseError);
    CHECK_THROWS_AS(parse_poly("x"), ParseError);
    CHECK_THROWS_AS(parse_poly("2 2"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("term order puts q before t and grades by total degree") {
    PolyQT p = Q + T;
    CHECK(p.str() == "q + t");
    PolyQT g = T * T + Q;  // t^2 has higher total degree
    CHECK(g.str() == "t^2 + q");
}
