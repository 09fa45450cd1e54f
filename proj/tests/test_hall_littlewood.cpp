#include <catch2/catch_amalgamated.hpp>

#include "sfq/hall_littlewood.hpp"

using namespace sfq;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
const PolyQT ONE = PolyQT::one();
const PolyQT T = PolyQT::t();
}  // namespace

TEST_CASE("TLV on small monomials") {
    // constant input, k=1, n=2: (1-t) s_1
    SymFun<PolyQT> got = tlv_apply(SymFun<PolyQT>::one(Basis::m), 1, 2);
    SymFun<PolyQT> expect(Basis::s);
    expect.add_term(P({1}), ONE - T);
    CHECK(got == expect);

    // m_1, k=1, n=2: s_2 - t s_{1,1}
    got = tlv_apply(SymFun<PolyQT>::element(Basis::m, P({1})), 1, 2);
    SymFun<PolyQT> expect2(Basis::s);
    expect2.add_term(P({2}), ONE);
    expect2.add_term(P({1, 1}), -T);
    CHECK(got == expect2);

    // long partitions die: l(lam) > k
    got = tlv_apply(SymFun<PolyQT>::element(Basis::m, P({1, 1, 1})), 2, 5);
    CHECK(got.is_zero());
}

TEST_CASE("TLV output is independent of the alphabet size") {
    for (int d = 0; d <= 4; ++d)
        for (const auto& lam : partitions_of(d))
            for (int k = std::max(1, lam.length()); k <= 3; ++k) {
                auto f = SymFun<PolyQT>::element(Basis::m, lam);
                int base = d + k;
                SymFun<PolyQT> ref = tlv_apply(f, k, base);
                for (int n = base + 1; n <= base + 2; ++n)
                    CHECK(tlv_apply(f, k, n) == ref);
            }
}

TEST_CASE("TLV kills Hall-Littlewood functions longer than k") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& mu : partitions_of(d)) {
            SymFun<PolyQT> qm = convert(hl_Q(mu), Basis::m);
            for (int k = 1; k < mu.length(); ++k) {
                SymFun<PolyQT> hit = tlv_apply(qm, k, d + k);
                CHECK(hit.is_zero());
            }
        }
}

TEST_CASE("Hall-Littlewood Q by TLV chains") {
    CHECK(hl_Q(Partition()) == SymFun<PolyQT>::one(Basis::s));

    SymFun<PolyQT> expect(Basis::s);
    expect.add_term(P({1}), ONE - T);
    CHECK(hl_Q(P({1})) == expect);

    // Q_(2) = (1-t)(s_2 - t s_{1,1})
    SymFun<PolyQT> expect2(Basis::s);
    expect2.add_term(P({2}), ONE - T);
    expect2.add_term(P({1, 1}), -(T * (ONE - T)));
    CHECK(hl_Q(P({2})) == expect2);

    // TLV raises columns on Q: TLV_k Q_mu = Q_{mu+1^k} for l(mu) <= k
    for (int d = 0; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (int k = std::max(1, mu.length()); k <= 3; ++k) {
                SymFun<PolyQT> lhs =
                    tlv_apply(convert(hl_Q(mu), Basis::m), k, d + k);
                CHECK(lhs == hl_Q(add_column(mu, k)));
            }
}

TEST_CASE("Kostka-Foulkes matrices at small n") {
    auto [k1, k1inv] = kf_matrices(1);
    CHECK(k1.entry(P({1}), P({1})) == ONE);

    const auto& [k2, k2inv] = kf_matrices(2);
    CHECK(k2.entry(P({2}), P({2})) == ONE);
    CHECK(k2.entry(P({2}), P({1, 1})) == T);
    CHECK(k2.entry(P({1, 1}), P({1, 1})) == ONE);
    CHECK(k2.entry(P({1, 1}), P({2})).is_zero());

    const auto& [k3, k3inv] = kf_matrices(3);
    CHECK(k3.entry(P({3}), P({1, 1, 1})) == PolyQT::t(3));
    CHECK(k3.entry(P({2, 1}), P({1, 1, 1})) == T + T * T);
    CHECK(k3.entry(P({3}), P({2, 1})) == T);
}

TEST_CASE("Kostka-Foulkes inverse is exact") {
    for (int n = 0; n <= 7; ++n) {
        const auto& [K, Kinv] = kf_matrices(n);
        for (const auto& lam : K.order)
            for (const auto& mu : K.order) {
                PolyQT acc;
                for (const auto& rho : K.order)
                    acc += K.entry(lam, rho) * Kinv.entry(rho, mu);
                CHECK(acc == (lam == mu ? ONE : PolyQT::zero()));
            }
    }
}

TEST_CASE("matrix is unitriangular for dominance") {
    for (int n = 1; n <= 6; ++n) {
        const auto& K = kf_matrices(n).first;
        for (const auto& lam : K.order) {
            CHECK(K.entry(lam, lam) == ONE);
            for (const auto& mu : K.order)
                if (!K.entry(lam, mu).is_zero()) CHECK(dominated_by(mu, lam));
        }
    }
}

TEST_CASE("charge oracle on the stated examples") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(charge_oracle(mu, mu) == ONE);

    CHECK(charge_oracle(P({2}), P({1, 1})) == T);
    CHECK(charge_oracle(P({3}), P({1, 1, 1})) == PolyQT::t(3));
}

TEST_CASE("TLV route matches the charge oracle") {
    for (int n = 0; n <= 6; ++n) {
        const auto& K = kf_matrices(n).first;
        for (const auto& lam : K.order)
            for (const auto& mu : K.order)
                CHECK(K.entry(lam, mu) == charge_oracle(lam, mu));
    }
}

TEST_CASE("specialization t=1 counts tableaux") {
    for (int n = 0; n <= 6; ++n) {
        const auto& K = kf_matrices(n).first;
        const auto& counts = detail::kostka_table(n);
        for (const auto& lam : K.order)
            for (const auto& mu : K.order) {
                RatQT at_one = specialize(K.entry(lam, mu), RatQT(0), RatQT(1));
                auto it = counts.find({lam, mu});
                Zint expect = it == counts.end() ? Zint(0) : it->second;
                CHECK(at_one == RatQT(expect));
            }
    }
}

TEST_CASE("entries stay in nonnegative powers of t") {
    for (int n = 0; n <= 6; ++n) {
        const auto& K = kf_matrices(n).first;
        for (const auto& [key, entry] : K.entries) {
            CHECK_FALSE(entry.has_negative_exponent());
            for (const auto& [e, c] : entry.terms()) CHECK(e.q == 0);
        }
    }
}

TEST_CASE("cocharge companion") {
    // H~_(1,1)[X;t] = s_2 + t s_{1,1}
    SymFun<PolyQT> expect(Basis::s);
    expect.add_term(P({2}), ONE);
    expect.add_term(P({1, 1}), T);
    CHECK(hl_Htilde(P({1, 1})) == expect);

    // H~_(2)[X;t] = s_2 + t s_{1,1}? no: K~_{lam,(2)} = t^0 K_{lam,(2)}(1/t)
    SymFun<PolyQT> expect2(Basis::s);
    expect2.add_term(P({2}), ONE);
    CHECK(hl_Htilde(P({2})) == expect2);
}
