#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kotoric/ku.hpp"

using namespace kotoric;

namespace {

KuElement from_terms(const Truncation& t, int s,
                     std::vector<std::pair<Exponents, long long>> terms) {
    KuElement e = ku_zero(t, s);
    for (auto& [a, c] : terms) e.coeffs[a] = c;
    return e;
}

Exponents random_exponents(std::mt19937& rng, int m, int bound) {
    Exponents e(static_cast<std::size_t>(m));
    std::uniform_int_distribution<int> dist(0, bound);
    for (auto& x : e) x = dist(rng);
    return e;
}

}  // namespace

TEST_CASE("truncation bounds must be even and at least two") {
    CHECK_THROWS_AS(Truncation({3}), std::invalid_argument);
    CHECK_THROWS_AS(Truncation({0}), std::invalid_argument);
    CHECK_NOTHROW(Truncation({2, 6, 4}));
}

TEST_CASE("ku_monomial expands conjugates through the geometric series") {
    SECTION("xbar at d=4") {
        Truncation t({4});
        CHECK(ku_monomial({0}, {1}, 0, t) ==
              from_terms(t, 0, {{{1}, -1}, {{2}, 1}, {{3}, -1}, {{4}, 1}}));
    }
    SECTION("x*xbar at d=4") {
        Truncation t({4});
        CHECK(ku_monomial({1}, {1}, 0, t) ==
              from_terms(t, 0, {{{2}, -1}, {{3}, 1}, {{4}, -1}}));
    }
    SECTION("independent variables") {
        Truncation t({2, 2});
        CHECK(ku_monomial({1, 0}, {0, 1}, 2, t) ==
              from_terms(t, 2, {{{1, 1}, -1}, {{1, 2}, 1}}));
    }
}

TEST_CASE("defining relation x*xbar + x + xbar = 0") {
    for (int m = 1; m <= 3; ++m)
        for (int d : {2, 4, 6}) {
            Truncation t = Truncation::uniform(m, d);
            for (int i = 0; i < m; ++i) {
                Exponents ei(static_cast<std::size_t>(m), 0);
                ei[static_cast<std::size_t>(i)] = 1;
                Exponents zero(static_cast<std::size_t>(m), 0);
                KuElement sum = ku_add(
                    ku_add(ku_monomial(ei, ei, 0, t), ku_monomial(ei, zero, 0, t)),
                    ku_monomial(zero, ei, 0, t));
                CHECK(sum.is_zero());
            }
        }
}

TEST_CASE("ku_monomial is multiplicative") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        Truncation t = Truncation::uniform(m, 2 * (1 + static_cast<int>(rng() % 3)));
        Exponents i1 = random_exponents(rng, m, 2), j1 = random_exponents(rng, m, 2);
        Exponents i2 = random_exponents(rng, m, 2), j2 = random_exponents(rng, m, 2);
        int s1 = static_cast<int>(rng() % 3), s2 = static_cast<int>(rng() % 3);
        Exponents isum(static_cast<std::size_t>(m)), jsum(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
            isum[k] = i1[k] + i2[k];
            jsum[k] = j1[k] + j2[k];
        }
        CHECK(ku_monomial(isum, jsum, s1 + s2, t) ==
              ku_mul(ku_monomial(i1, j1, s1, t), ku_monomial(i2, j2, s2, t)));
    }
}

TEST_CASE("ku_mul basics") {
    Truncation t({4});
    KuElement x = ku_monomial({1}, {0}, 0, t);
    SECTION("zero annihilates") { CHECK(ku_mul(x, ku_zero(t, 0)).is_zero()); }
    SECTION("x times xbar equals the mixed monomial") {
        CHECK(ku_mul(ku_monomial({1}, {0}, 0, t), ku_monomial({0}, {1}, 0, t)) ==
              ku_monomial({1}, {1}, 0, t));
    }
    SECTION("(1+x)*xbar + x = 0, restating the defining relation") {
        KuElement one_plus_x = ku_add(ku_unit(t), x);
        KuElement lhs = ku_add(ku_mul(one_plus_x, ku_monomial({0}, {1}, 0, t)), x);
        CHECK(lhs.is_zero());
    }
    SECTION("mismatched truncations are a hard error") {
        CHECK_THROWS_AS(ku_mul(x, ku_unit(Truncation({6}))), std::invalid_argument);
    }
}

TEST_CASE("conjugation is the truncated ring involution") {
    SECTION("conjugate of x expands the series") {
        Truncation t({4});
        CHECK(ku_conjugate(ku_monomial({1}, {0}, 0, t)) == ku_monomial({0}, {1}, 0, t));
    }
    SECTION("v-powers pick up the sign") {
        Truncation t({2});
        CHECK(ku_conjugate(ku_unit(t, 2)) == ku_unit(t, 2));
        CHECK(ku_conjugate(ku_unit(t, 1)) == ku_scale(ku_unit(t, 1), -1));
    }
    SECTION("involution holds exactly on the truncated model") {
        std::mt19937 rng(37);
        for (int trial = 0; trial < 60; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 3);
            Truncation t = Truncation::uniform(m, 2 * (1 + static_cast<int>(rng() % 3)));
            KuElement a = ku_monomial(random_exponents(rng, m, 2), random_exponents(rng, m, 2),
                                      static_cast<int>(rng() % 4), t);
            CHECK(ku_conjugate(ku_conjugate(a)) == a);
        }
    }
    SECTION("conjugation is a ring map") {
        std::mt19937 rng(38);
        for (int trial = 0; trial < 30; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 2);
            Truncation t = Truncation::uniform(m, 4);
            KuElement a = ku_monomial(random_exponents(rng, m, 2), random_exponents(rng, m, 1),
                                      static_cast<int>(rng() % 2), t);
            KuElement b = ku_monomial(random_exponents(rng, m, 2), random_exponents(rng, m, 1),
                                      static_cast<int>(rng() % 2), t);
            CHECK(ku_conjugate(ku_mul(a, b)) == ku_mul(ku_conjugate(a), ku_conjugate(b)));
        }
    }
}

TEST_CASE("restriction kills variables outside the subset") {
    Truncation t({4, 4});
    KuElement x1 = ku_monomial({1, 0}, {0, 0}, 0, t);
    KuElement x2 = ku_monomial({0, 1}, {0, 0}, 0, t);
    KuElement x1x2 = ku_mul(x1, x2);
    CHECK(ku_restrict(ku_add(x1, x2), {1}) == x1);
    CHECK(ku_restrict(x1x2, {1}).is_zero());
    CHECK(ku_restrict(ku_add(x1x2, x1), {1, 2}) == ku_add(x1x2, x1));
}
