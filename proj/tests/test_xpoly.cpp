#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sfq/xpoly.hpp"

using namespace sfq;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

const PolyQT ONE = PolyQT::one();
const PolyQT Q = PolyQT::q();
const PolyQT T = PolyQT::t();

XPoly random_xpoly(std::mt19937& rng, int n, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::uniform_int_distribution<int> coeff(-4, 4);
    XPoly p(n);
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        XPoly::Exps e(n);
        for (int j = 0; j < n; ++j) e[j] = expo(rng);
        p.add_term(e, RatQT(Zint(coeff(rng))));
    }
    return p;
}

/// Random symmetric polynomial: the Macdonald operator preserves
/// polynomiality only on the symmetric subspace.
XPoly random_sym_xpoly(std::mt19937& rng, int n, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> nterms(1, 3);
    SymFun<RatQT> f(Basis::m);
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        auto parts = partitions_of(deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        f.add_term(parts[pick(rng)], RatQT(Zint(coeff(rng))));
    }
    return expand(f, n);
}

}  // namespace

TEST_CASE("expansion of symmetric functions into variables") {
    auto s1 = SymFun<PolyQT>::element(Basis::s, P({1}));
    XPoly x1px2 = XPoly::variable(2, 0) + XPoly::variable(2, 1);
    CHECK(expand(s1, 2) == x1px2);

    auto s11 = SymFun<PolyQT>::element(Basis::s, P({1, 1}));
    CHECK(expand(s11, 1).is_zero());

    auto e2 = SymFun<PolyQT>::element(Basis::e, P({2}));
    CHECK(expand(e2, 2) == XPoly::variable(2, 0) * XPoly::variable(2, 1));
}

TEST_CASE("lift recovers monomial expansions") {
    XPoly x1px2 = XPoly::variable(2, 0) + XPoly::variable(2, 1);
    CHECK(lift(x1px2) == promote(SymFun<PolyQT>::element(Basis::m, P({1}))));

    XPoly x1x2 = XPoly::variable(2, 0) * XPoly::variable(2, 1);
    CHECK(lift(x1x2) == promote(SymFun<PolyQT>::element(Basis::m, P({1, 1}))));

    XPoly mix = XPoly::variable(2, 0) * XPoly::variable(2, 0) +
                XPoly::variable(2, 1) * XPoly::variable(2, 1) +
                XPoly::variable(2, 0) * XPoly::variable(2, 1);
    SymFun<PolyQT> expect(Basis::m);
    expect.add_term(P({2}), ONE);
    expect.add_term(P({1, 1}), ONE);
    CHECK(lift(mix) == promote(expect));

    // lift . expand = identity when degree <= alphabet
    std::mt19937 rng(61);
    for (int d = 0; d <= 4; ++d)
        for (const auto& lam : partitions_of(d)) {
            auto m = SymFun<PolyQT>::element(Basis::m, lam);
            if (lam.length() > 4) continue;
            CHECK(lift(expand(m, 4)) == promote(m));
        }

    CHECK_THROWS_AS(lift(XPoly::variable(1, 0) * XPoly::variable(1, 0)),
                    DegreeExceedsAlphabet);
    XPoly asym = XPoly::variable(2, 0);
    CHECK_THROWS_AS(lift(asym), NotSymmetric);
}

TEST_CASE("subset scaling") {
    XPoly x1x2 = XPoly::variable(2, 0) * XPoly::variable(2, 1);
    CHECK(x1x2.scaled_subset({0}, RatQT(Q)) == x1x2 * RatQT(Q));

    std::mt19937 rng(67);
    XPoly p = random_xpoly(rng, 3);
    CHECK(p.scaled_subset({}, RatQT(T)) == p);

    XPoly x1px2 = XPoly::variable(2, 0) + XPoly::variable(2, 1);
    CHECK(x1px2.scaled_subset({0, 1}, RatQT(T)) == x1px2 * RatQT(T));
}

TEST_CASE("exact division of alphabet polynomials") {
    std::mt19937 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        XPoly a = random_xpoly(rng, 3);
        XPoly b = random_xpoly(rng, 3);
        if (b.is_zero()) continue;
        CHECK(xdiv_exact(a * b, b) == a);
    }
    XPoly x1 = XPoly::variable(2, 0), x2 = XPoly::variable(2, 1);
    CHECK_THROWS_AS(xdiv_exact(x1 + x2, x1 * x2), NotDivisible);
}

TEST_CASE("macdonald operator, subset-sum form") {
    // constant input, n=2: eigenvalue (1+u)(1+ut)
    for (const RatQT& u : {RatQT(1), RatQT(Q), RatQT(T * T)}) {
        XPoly one2 = XPoly::one(2);
        RatQT expect = (RatQT(1) + u) * (RatQT(1) + u * RatQT(T));
        CHECK(macdonald_sum_form(one2, u) == one2 * expect);

        // P_(1) = x1 + x2: eigenvalue (1+u)(1+utq)
        XPoly p1 = XPoly::variable(2, 0) + XPoly::variable(2, 1);
        RatQT expect2 = (RatQT(1) + u) * (RatQT(1) + u * RatQT(T * Q));
        CHECK(macdonald_sum_form(p1, u) == p1 * expect2);
    }

    // u = 0 keeps only the empty-subset term
    std::mt19937 rng(73);
    for (int rep = 0; rep < 5; ++rep) {
        XPoly p = random_xpoly(rng, 3);
        CHECK(macdonald_sum_form(p, RatQT(0)) == p);
    }
}

TEST_CASE("macdonald operator, determinantal form") {
    RatQT u(Q);
    XPoly one2 = XPoly::one(2);
    RatQT expect = (RatQT(1) + u) * (RatQT(1) + u * RatQT(T));
    CHECK(macdonald_det_form(one2, u) == one2 * expect);

    // single variable: (1 + u T_1^q) p
    std::mt19937 rng(79);
    for (int rep = 0; rep < 5; ++rep) {
        XPoly p = random_xpoly(rng, 1);
        XPoly expect1 = p + p.scaled_subset({0}, RatQT(Q)) * u;
        CHECK(macdonald_det_form(p, u) == expect1);
    }

    // agreement with the sum form on x1^2 + x2^2
    XPoly sq = XPoly::variable(2, 0) * XPoly::variable(2, 0) +
               XPoly::variable(2, 1) * XPoly::variable(2, 1);
    CHECK(macdonald_det_form(sq, u) == macdonald_sum_form(sq, u));
}

TEST_CASE("sum and determinantal forms agree on random inputs") {
    std::mt19937 rng(83);
    for (int n = 1; n <= 4; ++n)
        for (const RatQT& u : {RatQT(1), RatQT(Q), RatQT(T * T)})
            for (int rep = 0; rep < 3; ++rep) {
                XPoly p = random_sym_xpoly(rng, n, 3);
                CHECK(macdonald_sum_form(p, u) == macdonald_det_form(p, u));
            }
}

TEST_CASE("straightening agrees with alternant division") {
    // brute-force oracle: S_alpha = det(x_i^{alpha_j + n - j}) / Vandermonde
    auto alternant = [](const Composition& alpha) {
        int n = static_cast<int>(alpha.size());
        XPoly det(n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inv;
            XPoly::Exps e(n);
            for (int j = 0; j < n; ++j) e[perm[j]] = alpha[j] + (n - 1 - j);
            det.add_term(e, RatQT(Zint(inv % 2 == 0 ? 1 : -1)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };

    std::mt19937 rng(89);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 12; ++rep) {
            Composition alpha(n);
            for (int i = 0; i < n; ++i) alpha[i] = entry(rng);
            auto [sign, part] = straighten(alpha);
            XPoly det = alternant(alpha);
            XPoly vdm = vandermonde(n, full_window(n));
            if (sign == 0) {
                CHECK(det.is_zero());
            } else {
                XPoly expect = expand(SymFun<PolyQT>::element(Basis::s, part), n) *
                               RatQT(Zint(sign));
                CHECK(xdiv_exact(det, vdm) == expect);
            }
        }
    }
}

TEST_CASE("LV operator on the empty partition") {
    // LV_1 applied to 1 on two variables gives (1-t) s_1
    SymFun<RatQT> got = lv_apply(SymFun<RatQT>::one(Basis::s), 1, 2);
    SymFun<RatQT> expect(Basis::s);
    expect.add_term(P({1}), RatQT(ONE - T));
    CHECK(got == expect);

    CHECK_THROWS_AS(lv_apply(SymFun<RatQT>::element(Basis::s, P({2})), 1, 2),
                    DegreeExceedsAlphabet);
}

TEST_CASE("W operator structure") {
    CHECK_THROWS_AS(w_apply(SymFun<RatQT>::element(Basis::s, P({2})), 1, 2),
                    DegreeExceedsAlphabet);
    // plain W_1 applied to 1 on two variables is a degree-1 symmetric function
    SymFun<RatQT> got = w_apply(SymFun<RatQT>::one(Basis::s), 1, 2);
    CHECK(got.is_homogeneous());
    CHECK(got.max_degree() == 1);
}
