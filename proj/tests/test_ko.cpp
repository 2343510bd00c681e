#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <tuple>
#include <vector>

#include "kotoric/ko.hpp"

using namespace kotoric;

namespace {

G2Symbol sym(Exponents I, Exponents J, int s) { return G2Symbol{std::move(I), std::move(J), s}; }

KoElement element_of(int m, int s, std::vector<std::pair<G2Symbol, long long>> terms) {
    KoElement e = ko_zero(m, -2 * s);
    for (auto& [g, c] : terms) e.reduced.emplace(g, Int(c));
    return e;
}

Exponents random_exponents(std::mt19937& rng, int m, int bound) {
    Exponents e(static_cast<std::size_t>(m));
    std::uniform_int_distribution<int> dist(0, bound);
    for (auto& x : e) x = dist(rng);
    return e;
}

// random symbol already in normal position
G2Symbol random_g2_symbol(std::mt19937& rng, int m, int bound, int s) {
    while (true) {
        Exponents I = random_exponents(rng, m, bound), J = random_exponents(rng, m, bound);
        for (std::size_t k = 0; k < I.size(); ++k)
            if (I[k] != 0 && J[k] != 0) J[k] = 0;
        if (!is_g2_normal(I, J)) {
            std::swap(I, J);
            if (!is_g2_normal(I, J)) continue;
        }
        return G2Symbol{I, J, s};
    }
}

KoElement random_element(std::mt19937& rng, int m, int s, int nterms, int bound) {
    KoElement e = ko_zero(m, -2 * s);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int i = 0; i < nterms; ++i) {
        KoElement part =
            normalize_symbol(random_exponents(rng, m, bound), random_exponents(rng, m, bound), s);
        e = ko_add(e, ko_scale(part, coeff(rng)));
    }
    if (rng() % 3 == 0) e = ko_add(e, ko_from_scalar(m, KoScalar::r_v_power(s).scaled(coeff(rng)), -2 * s));
    return e;
}

// normalization with randomly chosen relation-(B) pivots, for the confluence check
KoElement normalize_random_pivots(const Exponents& I0, const Exponents& J0, int s,
                                  std::mt19937& rng) {
    const int m = static_cast<int>(I0.size());
    KoElement out = ko_zero(m, -2 * s);
    std::vector<std::tuple<Exponents, Exponents, Int>> stack{{I0, J0, Int(1)}};
    while (!stack.empty()) {
        auto [I, J, c] = stack.back();
        stack.pop_back();
        std::vector<int> conflicts;
        for (int k = 0; k < m; ++k)
            if (I[static_cast<std::size_t>(k)] > 0 && J[static_cast<std::size_t>(k)] > 0)
                conflicts.push_back(k);
        if (!conflicts.empty()) {
            const int k = conflicts[rng() % conflicts.size()];
            Exponents Il = I, Jr = J;
            --Il[static_cast<std::size_t>(k)];
            --Jr[static_cast<std::size_t>(k)];
            stack.emplace_back(Il, J, -c);
            stack.emplace_back(I, Jr, -c);
            continue;
        }
        KoElement part = normalize_symbol(I, J, s);  // only (A)/fold left to apply
        out = ko_add(out, ko_scale(part, c));
    }
    return out;
}

}  // namespace

TEST_CASE("KoScalar ring relations") {
    KoScalar e = KoScalar::e(), a = KoScalar::alpha(), b = KoScalar::beta(1);
    CHECK((e + e).is_zero());                             // 2e = 0
    CHECK((e * e * e).is_zero());                         // e^3 = 0
    CHECK((e * a).is_zero());                             // ea = 0
    CHECK(a * a == KoScalar::beta(1, 4));                 // a^2 = 4b
    CHECK(b * KoScalar::beta(-1) == KoScalar::integer(1));
    CHECK(KoScalar::r_v_power(0) == KoScalar::integer(2));
    CHECK(KoScalar::r_v_power(1).is_zero());
    CHECK(KoScalar::r_v_power(2) == KoScalar::alpha());
    CHECK(KoScalar::r_v_power(4) == KoScalar::beta(1, 2));
    CHECK(KoScalar::r_v_power(-2) == KoScalar::alpha(-1));
}

TEST_CASE("normalize_symbol resolves the rewriting relations") {
    SECTION("one application of relation (A)") {
        CHECK(normalize_symbol({0}, {1}, 1) == element_of(1, 1, {{sym({1}, {0}, 1), -1}}));
    }
    SECTION("relation (B) then (A)") {
        CHECK(normalize_symbol({1}, {1}, 0) == element_of(1, 0, {{sym({1}, {0}, 0), -2}}));
    }
    SECTION("the empty pair folds into r(v^s)") {
        KoElement r = normalize_symbol({0}, {0}, 2);
        CHECK(r.reduced.empty());
        CHECK(r.scalar == KoScalar::alpha());
        CHECK(normalize_symbol({0}, {0}, 1).is_zero());
        CHECK(normalize_symbol({0}, {0}, 0).scalar == KoScalar::integer(2));
    }
    SECTION("every emitted symbol is in normal position") {
        std::mt19937 rng(5150);
        for (int trial = 0; trial < 200; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 4);
            KoElement e = normalize_symbol(random_exponents(rng, m, 4),
                                           random_exponents(rng, m, 4),
                                           static_cast<int>(rng() % 4) - 1);
            for (const auto& [g, c] : e.reduced) {
                CHECK(is_g2_normal(g));
                CHECK(c != 0);
            }
        }
    }
}

TEST_CASE("normalization is sound under the complexification oracle") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        Truncation t = Truncation::uniform(m, 4);
        Exponents I = random_exponents(rng, m, 4), J = random_exponents(rng, m, 4);
        const int s = static_cast<int>(rng() % 4) - 1;
        KuElement expected =
            ku_add(ku_monomial(I, J, s, t),
                   ku_scale(ku_monomial(J, I, s, t), odd(s) ? -1 : 1));
        CHECK(complexify(normalize_symbol(I, J, s), t) == expected);
    }
}

TEST_CASE("normalization is confluent: pivot order does not matter") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        Truncation t = Truncation::uniform(m, 4);
        Exponents I = random_exponents(rng, m, 4), J = random_exponents(rng, m, 4);
        const int s = static_cast<int>(rng() % 2);
        KoElement canonical = normalize_symbol(I, J, s);
        KoElement shuffled = normalize_random_pivots(I, J, s, rng);
        CHECK(ko_equal(canonical, shuffled));  // identical normal forms
        CHECK(ko_equal(canonical, shuffled, t));
    }
}

TEST_CASE("realify") {
    Truncation t({4});
    CHECK(realify(ku_unit(t, 2)).scalar == KoScalar::alpha());
    CHECK(realify(ku_unit(t, 1)).is_zero());
    CHECK(realify(ku_monomial({1}, {0}, 0, t)) == element_of(1, 0, {{sym({1}, {0}, 0), 1}}));
}

TEST_CASE("complexify") {
    Truncation t({4});
    SECTION("bracket class") {
        KuElement c = complexify(element_of(1, 0, {{sym({1}, {0}, 0), 1}}), t);
        KuElement expected = ku_zero(t, 0);
        expected.coeffs[{2}] = 1;
        expected.coeffs[{3}] = -1;
        expected.coeffs[{4}] = 1;
        CHECK(c == expected);
    }
    SECTION("coefficient scalars") {
        CHECK(complexify(ko_from_scalar(1, KoScalar::alpha()), t) == ku_scale(ku_unit(t, 2), 2));
        CHECK(complexify(ko_from_scalar(1, KoScalar::e()), t).is_zero());
        CHECK(complexify(ko_from_scalar(1, KoScalar::beta(1)), t) == ku_unit(t, 4));
    }
}

TEST_CASE("roundtrip identities") {
    std::mt19937 rng(1009);
    SECTION("r(c(a)) = 2a, including torsion killed by 2") {
        for (int trial = 0; trial < 80; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 3);
            Truncation t = Truncation::uniform(m, 4);
            const int s = static_cast<int>(rng() % 3);
            KoElement a = random_element(rng, m, s, 2, 2);
            CHECK(ko_equal(realify(complexify(a, t)), ko_scale(a, 2), t));
        }
    }
    SECTION("c(r(u)) = u + conj(u)") {
        for (int trial = 0; trial < 80; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 3);
            Truncation t = Truncation::uniform(m, 4);
            KuElement u = ku_monomial(random_exponents(rng, m, 2), random_exponents(rng, m, 2),
                                      static_cast<int>(rng() % 3), t);
            CHECK(complexify(realify(u), t) == ku_add(u, ku_conjugate(u)));
        }
    }
}

TEST_CASE("ko_mul") {
    SECTION("relation (C) worked example") {
        KoElement x1 = element_of(2, 0, {{sym({1, 0}, {0, 0}, 0), 1}});
        KoElement x2 = element_of(2, 0, {{sym({0, 1}, {0, 0}, 0), 1}});
        CHECK(ko_mul(x1, x2) == element_of(2, 0, {{sym({1, 1}, {0, 0}, 0), 1},
                                                  {sym({1, 0}, {0, 1}, 0), 1}}));
    }
    SECTION("the scalar 2 is the image of the unit under r") {
        std::mt19937 rng(3);
        KoElement a = random_element(rng, 2, 1, 2, 2);
        KoElement two = ko_from_scalar(2, KoScalar::integer(2));
        CHECK(ko_equal(ko_mul(a, two), ko_scale(a, 2)));
    }
    SECTION("e kills reduced classes") {
        KoElement a = element_of(2, 0, {{sym({1, 0}, {0, 0}, 0), 1}});
        CHECK(ko_module_action(KoScalar::e(), a).is_zero());
        CHECK(ko_mul(ko_from_scalar(2, KoScalar::e()), a).is_zero());
    }
    SECTION("commutative and associative under the oracle") {
        std::mt19937 rng(55);
        Truncation t = Truncation::uniform(2, 4);
        for (int trial = 0; trial < 25; ++trial) {
            KoElement a = random_element(rng, 2, static_cast<int>(rng() % 2), 2, 1);
            KoElement b = random_element(rng, 2, static_cast<int>(rng() % 2), 2, 1);
            KoElement c = random_element(rng, 2, static_cast<int>(rng() % 2), 1, 1);
            CHECK(ko_equal(ko_mul(a, b), ko_mul(b, a), t));
            CHECK(ko_equal(ko_mul(ko_mul(a, b), c), ko_mul(a, ko_mul(b, c)), t));
        }
    }
}

TEST_CASE("module action") {
    KoElement a = element_of(1, 0, {{sym({2}, {0}, 0), 3}});
    SECTION("beta shifts s by four") {
        KoElement r = ko_module_action(KoScalar::beta(1), a);
        CHECK(r == element_of(1, 4, {{sym({2}, {0}, 4), 3}}));
        CHECK(r.degree == -8);
    }
    SECTION("alpha doubles and shifts s by two") {
        KoElement r = ko_module_action(KoScalar::alpha(), a);
        CHECK(r == element_of(1, 2, {{sym({2}, {0}, 2), 6}}));
    }
    SECTION("e^2 acts as zero on reduced classes") {
        CHECK(ko_module_action(KoScalar::e2(), a).is_zero());
    }
}

TEST_CASE("gamma shift") {
    KoElement a = element_of(1, 0, {{sym({1}, {0}, 0), 1}});
    SECTION("shifts the v-exponent") {
        CHECK(gamma_shift(a, 1) == element_of(1, 2, {{sym({1}, {0}, 2), 1}}));
        CHECK(gamma_shift(a, 1).degree == -4);
    }
    SECTION("gamma squared is beta") {
        CHECK(gamma_shift(gamma_shift(a, 1), 1) == ko_module_action(KoScalar::beta(1), a));
    }
    SECTION("twice gamma is alpha") {
        CHECK(ko_equal(ko_scale(gamma_shift(a, 1), 2), ko_module_action(KoScalar::alpha(), a)));
    }
    SECTION("rejects elements with scalar part") {
        CHECK_THROWS_AS(gamma_shift(ko_one(1), 1), std::domain_error);
    }
}

TEST_CASE("g1 classes") {
    CHECK(g1_class({1}, 0, 2) == element_of(2, 0, {{sym({1, 0}, {0, 0}, 0), 1}}));
    CHECK(g1_class({}, 1, 2).is_zero());
    CHECK(g1_class({}, 0, 2).scalar == KoScalar::integer(2));
    CHECK(g1_class({1, 2}, 1, 2) == element_of(2, 1, {{sym({1, 1}, {0, 0}, 1), 1}}));
    CHECK_THROWS_AS(g1_class({3}, 0, 2), std::invalid_argument);
}

TEST_CASE("relation families (I) and (II)") {
    Truncation t = Truncation::uniform(2, 6);
    SECTION("squares of the top class, Example-style instance") {
        auto [lhs, rhs] = relation_I_sides({1, 2}, {}, {}, 0, 0, 2);
        CHECK(ko_equal(lhs, rhs, t));
    }
    SECTION("mixed-degree instance with empty A") {
        auto [lhs, rhs] = relation_I_sides({}, {1}, {2}, 1, 1, 2);
        CHECK(ko_equal(lhs, rhs, t));
    }
    SECTION("gamma appears when s + t = 2") {
        auto [lhs, rhs] = relation_I_sides({1}, {}, {}, 1, 1, 2);
        CHECK(ko_equal(lhs, rhs, t));
    }
    SECTION("relation (II) at three vertices") {
        Truncation t3 = Truncation::uniform(3, 4);
        for (int s = 0; s <= 1; ++s) {
            auto [lhs, rhs] = relation_II_sides(1, {2, 3}, s, 3);
            CHECK(ko_equal(lhs, rhs, t3));
        }
    }
    SECTION("preconditions are enforced") {
        CHECK_THROWS_AS(relation_II_sides(2, {1, 3}, 0, 3), std::invalid_argument);
        CHECK_THROWS_AS(relation_II_sides(1, {2}, 0, 3), std::invalid_argument);
        CHECK_THROWS_AS(relation_I_sides({1}, {1}, {}, 0, 0, 2), std::invalid_argument);
    }
    SECTION("random instances agree under the oracle") {
        std::mt19937 rng(31337);
        Truncation t4 = Truncation::uniform(4, 4);
        for (int trial = 0; trial < 40; ++trial) {
            std::set<int> A, B, C;
            for (int v = 1; v <= 4; ++v) {
                switch (rng() % 4) {
                    case 0: A.insert(v); break;
                    case 1: B.insert(v); break;
                    case 2: C.insert(v); break;
                    default: break;
                }
            }
            auto [lhs, rhs] = relation_I_sides(A, B, C, static_cast<int>(rng() % 2),
                                               static_cast<int>(rng() % 2), 4);
            CHECK(ko_equal(lhs, rhs, t4));
        }
        for (int trial = 0; trial < 40; ++trial) {
            std::set<int> S;
            while (S.size() < 2 + rng() % 2) S.insert(2 + static_cast<int>(rng() % 3));
            auto [lhs, rhs] = relation_II_sides(1, S, static_cast<int>(rng() % 2), 4);
            CHECK(ko_equal(lhs, rhs, t4));
        }
    }
}

TEST_CASE("relations (A), (B), (C) hold under the oracle") {
    std::mt19937 rng(161803);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        Truncation t = Truncation::uniform(m, 4);
        const int s = static_cast<int>(rng() % 2), s2 = static_cast<int>(rng() % 2);
        Exponents I = random_exponents(rng, m, 3), J = random_exponents(rng, m, 3);

        // (A)
        CHECK(ko_equal(normalize_symbol(I, J, s),
                       ko_scale(normalize_symbol(J, I, s), odd(s) ? -1 : 1), t));

        // (B) at the first conflicting index, when one exists
        for (std::size_t k = 0; k < I.size(); ++k)
            if (I[k] > 0 && J[k] > 0) {
                Exponents Il = I, Jr = J;
                --Il[k];
                --Jr[k];
                KoElement rhs = ko_sub(ko_scale(normalize_symbol(Il, J, s), -1),
                                       normalize_symbol(I, Jr, s));
                CHECK(ko_equal(normalize_symbol(I, J, s), rhs, t));
                break;
            }

        // (C) on normal symbols
        G2Symbol g1s = random_g2_symbol(rng, m, 3, s), g2s = random_g2_symbol(rng, m, 3, s2);
        KoElement prod = ko_mul(element_of(m, s, {{g1s, 1}}), element_of(m, s2, {{g2s, 1}}));
        Exponents ih(I.size()), jk(I.size()), jh(I.size()), ik(I.size());
        for (std::size_t k = 0; k < I.size(); ++k) {
            ih[k] = g1s.I[k] + g2s.I[k];
            jk[k] = g1s.J[k] + g2s.J[k];
            jh[k] = g1s.J[k] + g2s.I[k];
            ik[k] = g1s.I[k] + g2s.J[k];
        }
        KoElement expect = ko_add(normalize_symbol(ih, jk, s + s2),
                                  ko_scale(normalize_symbol(jh, ik, s + s2), odd(s) ? -1 : 1));
        CHECK(ko_equal(prod, expect, t));
    }
}

TEST_CASE("equality modes") {
    SECTION("the infinite relation becomes finite after truncation") {
        // 2[1,0] + sum_{n=2}^{N} (-1)^{n-1} [n,0] = 0 at truncation (N)
        for (int n_top : {4, 6, 8}) {
            KoElement lhs = ko_scale(normalize_symbol({1}, {0}, 0), 2);
            for (int n = 2; n <= n_top; ++n)
                lhs = ko_add(lhs, ko_scale(normalize_symbol({n}, {0}, 0), odd(n - 1) ? -1 : 1));
            CHECK_FALSE(ko_equal(lhs, ko_zero(1, 0)));  // no finite symbolic relation
            CHECK(ko_equal(lhs, ko_zero(1, 0), Truncation::uniform(1, n_top)));
        }
    }
    SECTION("symbolic mode distinguishes single symbols from zero") {
        CHECK_FALSE(ko_equal(element_of(1, 0, {{sym({1}, {0}, 0), 1}}), ko_zero(1, 0)));
    }
    SECTION("reflexivity") {
        std::mt19937 rng(2);
        KoElement a = random_element(rng, 2, 1, 3, 2);
        CHECK(ko_equal(a, a));
        CHECK(ko_equal(a, a, Truncation::uniform(2, 4)));
    }
    SECTION("degree mismatch is an error") {
        KoElement a = element_of(1, 0, {{sym({1}, {0}, 0), 1}});
        KoElement b = element_of(1, 1, {{sym({1}, {0}, 1), 1}});
        CHECK_THROWS_AS(ko_equal(a, b), std::invalid_argument);
    }
    SECTION("torsion scalars are invisible to c but not to equality") {
        Truncation t({4});
        KoElement e2 = ko_from_scalar(1, KoScalar::e2());
        CHECK(complexify(e2, t).is_zero());
        CHECK_FALSE(ko_equal(e2, ko_zero(1, -2), t));
    }
}

TEST_CASE("rank census of the smash-product module") {
    SECTION("single factor: one basis element per summand") {
        for (int w = 0; w <= 6; ++w) {
            auto [ko, ku] = smash_rank_two_ways(1, 0, w);
            CHECK(ko == ku);
            CHECK(ko == w + 1);
        }
    }
    SECTION("two and three factors agree") {
        for (int m = 2; m <= 3; ++m)
            for (int deg = -8; deg < 0; ++deg)
                for (int w = 0; w <= 5; ++w) {
                    auto [ko, ku] = smash_rank_two_ways(m, deg, w);
                    CHECK(ko == ku);
                }
    }
    SECTION("window zero and parity") {
        auto [ko0, ku0] = smash_rank_two_ways(2, -1, 3);
        CHECK(ko0 == 0);
        CHECK(ku0 == 0);
        auto [ko1, ku1] = smash_rank_two_ways(2, -4, 0);
        CHECK(ko1 == 1);
        CHECK(ku1 == 1);
    }
}
