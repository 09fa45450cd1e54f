#include <catch2/catch_amalgamated.hpp>

#include "sfq/partition.hpp"

using namespace sfq;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("conjugation") {
    CHECK(P({2, 1}).conjugate() == P({2, 1}));
    CHECK(P({3}).conjugate() == P({1, 1, 1}));
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());

    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("hook products") {
    auto [h1, hp1] = hook_products(P({1}));
    CHECK(h1 == PolyQT::one() - PolyQT::t());
    CHECK(hp1 == PolyQT::one() - PolyQT::q());

    auto [h0, hp0] = hook_products(Partition());
    CHECK(h0.is_one());
    CHECK(hp0.is_one());

    PolyQT one = PolyQT::one();
    PolyQT q = PolyQT::q(), t = PolyQT::t();
    auto [h21, hp21] = hook_products(P({2, 1}));
    CHECK(h21 == (one - q * t * t) * (one - t) * (one - t));
    CHECK(hp21 == (one - q * q * t) * (one - q) * (one - q));
}

TEST_CASE("hook products at q=t collapse to hook lengths") {
    // both h and h' become prod (1 - t^{arm+leg+1})
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : partitions_of(n)) {
            PolyQT expect = PolyQT::one();
            Partition conj = lam.conjugate();
            for (int i = 1; i <= lam.length(); ++i)
                for (int j = 1; j <= lam.part(i); ++j) {
                    int hook = (lam.part(i) - j) + (conj.part(j) - i) + 1;
                    expect *= PolyQT::one() - PolyQT::t(hook);
                }
            auto [h, hp] = hook_products(lam);
            CHECK(h.at_q_equals_t() == expect);
            CHECK(hp.at_q_equals_t() == expect);
        }
    }
}

TEST_CASE("n statistic") {
    CHECK(P({5}).n_stat() == 0);
    CHECK(P({1, 1}).n_stat() == 1);
    CHECK(P({3, 2, 1}).n_stat() == 4);
    CHECK(Partition().n_stat() == 0);

    // n(mu) = sum binom(mu'_i, 2)
    for (int n = 0; n <= 10; ++n) {
        for (const auto& mu : partitions_of(n)) {
            Partition conj = mu.conjugate();
            long rhs = 0;
            for (int c : conj.parts()) rhs += static_cast<long>(c) * (c - 1) / 2;
            CHECK(mu.n_stat() == rhs);
        }
    }
}

TEST_CASE("column prepending") {
    CHECK(add_column(Partition(), 2) == P({1, 1}));
    CHECK(add_column(P({1}), 1) == P({2}));
    CHECK(add_column(P({2, 1}), 3) == P({3, 2, 1}));
    CHECK_THROWS_AS(add_column(P({1, 1}), 1), LengthExceedsK);

    // conjugate of mu + 1^k is (k, mu')
    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = mu.length(); k <= mu.length() + 3; ++k) {
                if (k == 0) continue;
                Partition lhs = add_column(mu, k).conjugate();
                Partition rhs = add_row(mu.conjugate(), k);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("enumeration order and counts") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P({3}));
    CHECK(p3[1] == P({2, 1}));
    CHECK(p3[2] == P({1, 1, 1}));

    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);

    // reverse-lexicographic refines dominance: a dominating partition
    // appears no later than one it dominates
    for (int n = 0; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                CHECK_FALSE((dominated_by(ps[i], ps[j]) && !(ps[i] == ps[j])));
    }
}

TEST_CASE("vertical strips") {
    CHECK(is_vertical_strip(P({2, 1}), P({1, 1}), 1));
    CHECK_FALSE(is_vertical_strip(P({3, 1}), P({1, 1}), 2));
    // mu + 1^k is always a vertical k-strip over mu
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = std::max(1, mu.length()); k <= mu.length() + 2; ++k)
                CHECK(is_vertical_strip(add_column(mu, k), mu, k));
    // size mismatch
    CHECK_FALSE(is_vertical_strip(P({2, 1}), P({1, 1}), 2));
    // not contained
    CHECK_FALSE(is_vertical_strip(P({2, 1}), P({3}), 0));
}

TEST_CASE("serialization") {
    CHECK(P({3, 2, 1}).str() == "3,2,1");
    CHECK(Partition().str() == "-");
    CHECK(parse_partition("3,2,1") == P({3, 2, 1}));
    CHECK(parse_partition("-") == Partition());
    CHECK(parse_partition(" 4 , 4 , 2 ") == P({4, 4, 2}));
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,0"), ParseError);
}

TEST_CASE("dominance order") {
    CHECK(dominated_by(P({1, 1, 1}), P({3})));
    CHECK(dominated_by(P({2, 1}), P({3})));
    CHECK_FALSE(dominated_by(P({3}), P({2, 1})));
    // incomparable pair
    CHECK_FALSE(dominated_by(P({3, 3}), P({4, 1, 1})));
    CHECK_FALSE(dominated_by(P({4, 1, 1}), P({3, 3})));
}

TEST_CASE("z statistic") {
    CHECK(z_stat(Partition()) == 1);
    CHECK(z_stat(P({2})) == 2);
    CHECK(z_stat(P({1, 1})) == 2);
    CHECK(z_stat(P({2, 1})) == 2);
    CHECK(z_stat(P({3, 2, 2, 1})) == 3 * 2 * 2 * 2 * 1);  // 3^1*1! * 2^2*2! * 1^1*1!
}
